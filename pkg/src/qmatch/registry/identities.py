"""Exact series identities: preliminary lemmas and the ones used inside the proofs.

Each row is ``(id, lhs, rhs, statement, options)``.  ``options`` may carry
``extract=(a, b)`` (compare ``U_{an+b}`` of the left side), ``aliases`` and
``erratum`` (a note on how the printed form differs from the checked one), with
``printed_lhs`` / ``printed_rhs`` holding the literal printed side.
"""

import re

_TOKEN = re.compile(r"f(\d+)(?:\^(\d+))?")


def F(spec: str) -> str:
    """``"f2 f8^5 / f4^2 f16^2"`` -> DSL text for the eta quotient."""
    num, _, den = spec.partition("/")

    def side(s):
        parts = []
        for k, e in _TOKEN.findall(s):
            parts.append(f"f({k})" + (f"^{e}" if e and e != "1" else ""))
        return "*".join(parts) or "1"

    n = side(num)
    if not den.strip():
        return f"({n})"
    return f"({n}/({side(den)}))"


def fq(k: int) -> str:
    """Ramanujan's f(q) = f(q, -q^2) at q^k (so f(-q) = f1)."""
    return f"theta(+{k},-{2 * k})"


R5 = "R(q^5)"
_N5 = f"(1 - 2*q*{R5} + 4*q^2*{R5}^2 - 3*q^3*{R5}^3 + q^4*{R5}^4)"
_D5 = f"(1 + 3*q*{R5} + 4*q^2*{R5}^2 + 2*q^3*{R5}^3 + q^4*{R5}^4)"

W = "(S(-q)*T(q)*S(q^4)/(S(q)*T(-q)*T(q^4)))"
XI = "(X(q)^2*Y(q^3)^2/(X(q^3)^2*Y(q)^2))"
LAM3 = "(R(q)^2/R(q^2) + R(q^2)/R(q)^2)"
LAM6 = "(1/(R(-q)*R(-q^4)) - q^2*R(-q)*R(-q^4))"
LAM9 = "(R(q)/R(q^16) - q^6*R(q^16)/R(q))"
U10 = "(R(q)^2*R(q^2)/R(q^4))"
RR4 = "(q*R(q)*R(q^4))"
GH1 = "(G(q^2)^3*H(q) + q*G(q)*H(q^2)^3)"

JACOBI = [
    ("I.jacobi-quartic", "ph(1,2)^8 - chi(q)^8", "-16*q*ph(2,4)^-8",
     "(q;q^2)^8 - (-q;q^2)^8 = -16q (q^2;q^4)^-8"),
    ("I.jacobi-cubed", "ph(1,2)^24 - chi(q)^24", "-4096*q^3*ph(2,4)^-24 - 48*q",
     "(q;q^2)^24 - (-q;q^2)^24 = -4096q^3 (q^2;q^4)^-24 - 48q"),
]

LEMMAS = [
    # 2-dissections
    ("L2.2.1", "f(1)^2", f"{F('f2 f8^5 / f4^2 f16^2')} - 2*q*{F('f2 f16^2 / f8')}", "2-dissection of f1^2", {}),
    ("L2.2.2", "1/f(1)^2", f"{F('f8^5 / f2^5 f16^2')} + 2*q*{F('f4^2 f16^2 / f2^5 f8')}", "2-dissection of 1/f1^2", {}),
    ("L2.2.3", "f(1)^4", f"{F('f4^10 / f2^2 f8^4')} - 4*q*{F('f2^2 f8^4 / f4^2')}", "2-dissection of f1^4", {}),
    ("L2.2.4", "1/f(1)^4", f"{F('f4^14 / f2^14 f8^4')} + 4*q*{F('f4^2 f8^4 / f2^10')}", "2-dissection of 1/f1^4", {}),
    ("L2.2.5", "f(1)*f(3)",
     f"{F('f2 f8^2 f12^4 / f4^2 f6 f24^2')} - q*{F('f4^4 f6 f24^2 / f2 f8^2 f12^2')}", "2-dissection of f1 f3", {}),
    ("L2.2.6", "1/(f(1)*f(3))",
     f"{F('f8^2 f12^5 / f2^2 f4 f6^4 f24^2')} + q*{F('f4^5 f24^2 / f2^4 f6^2 f8^2 f12')}", "2-dissection of 1/(f1 f3)", {}),
    ("L2.2.7", "f(3)/f(1)^3",
     f"{F('f4^6 f6^3 / f2^9 f12^2')} + 3*q*{F('f4^2 f6 f12^2 / f2^7')}", "2-dissection of f3/f1^3", {}),
    ("L2.2.8", "f(3)^3/f(1)",
     f"{F('f4^3 f6^2 / f2^2 f12')} + q*{F('f12^3 / f4')}", "2-dissection of f3^3/f1", {"aliases": ("I.f33",)}),
    ("L2.2.9", "f(1)/f(3)",
     f"{F('f2 f16 f24^2 / f6^2 f8 f48')} - q*{F('f2 f8^2 f12 f48 / f4 f6^2 f16 f24')}", "2-dissection of f1/f3", {}),
    ("L2.2.10", "f(3)/f(1)",
     f"{F('f4 f6 f16 f24^2 / f2^2 f8 f12 f48')} + q*{F('f6 f8^2 f48 / f2^2 f16 f24')}", "2-dissection of f3/f1", {}),
    ("L2.2.11", "f(1)^2/f(3)^2",
     f"{F('f2 f4^2 f12^4 / f6^5 f8 f24')} - 2*q*{F('f2^2 f8 f12 f24 / f4 f6^4')}", "2-dissection of f1^2/f3^2", {}),
    ("L2.2.12", "f(1)/f(5)",
     f"{F('f2 f8 f20^3 / f4 f10^3 f40')} - q*{F('f4^2 f40 / f8 f10^2')}", "2-dissection of f1/f5", {}),
    ("L2.2.13", "f(5)/f(1)",
     f"{F('f8 f20^2 / f2^2 f40')} + q*{F('f4^3 f10 f40 / f2^3 f8 f20')}", "2-dissection of f5/f1", {}),
    # 3-dissections
    ("L2.3.1", "f(1)^2/f(2)", f"{F('f9^2 / f18')} - 2*q*{F('f3 f18^2 / f6 f9')}", "3-dissection of f1^2/f2", {}),
    ("L2.3.2", "f(2)/f(1)^2",
     f"{F('f6^4 f9^6 / f3^8 f18^3')} + 2*q*{F('f6^3 f9^3 / f3^7')} + 4*q^2*{F('f6^2 f18^3 / f3^6')}",
     "3-dissection of f2/f1^2", {}),
    ("L2.3.3", "f(1)*f(4)/f(2)",
     f"{F('f3 f12 f18^5 / f6^2 f9^2 f36^2')} - q*{F('f9 f36 / f18')}", "3-dissection of f1 f4/f2", {}),
    ("L2.3.4", "f(2)/(f(1)*f(4))",
     f"{F('f18^9 / f3^2 f9^3 f12^2 f36^3')} + q*{F('f6^2 f18^3 / f3^3 f12^3')}"
     f" + q^2*{F('f6^4 f9^3 f36^3 / f3^4 f12^4 f18^3')}", "3-dissection of f2/(f1 f4)", {}),
    ("L2.3.5", "f(1)^3",
     f"{F('f6 f9^6 / f3 f18^3')} - 3*q*f(9)^3 + 4*q^3*{F('f3^2 f18^6 / f6^2 f9^3')}", "3-dissection of f1^3", {}),
    ("L2.3.6", "f(1)*f(2)",
     f"{F('f6 f9^4 / f3 f18^2')} - q*f(9)*f(18) - 2*q^2*{F('f3 f18^4 / f6 f9^2')}", "3-dissection of f1 f2", {}),
    # 5-dissections
    ("L2.4.1", "f(1)", f"f(25)*(1/R(q^5) - q - q^2*R(q^5))", "5-dissection of f1",
     {"aliases": ("I.5df1",)}),
    ("L2.4.2", "phi(q)", "phi(q^25) + 2*q*theta(+15,+35) + 2*q^4*theta(+5,+45)", "5-dissection of phi",
     {"aliases": ("I.5dissectPhi",)}),
    ("L2.4.3", "psi(q)", "theta(+10,+15) + q*theta(+5,+20) + q^3*psi(q^25)", "5-dissection of psi",
     {"aliases": ("I.5dissectPsi",)}),
    # G, H modular relations
    ("L2.5.1", "G(q)*G(q^4) - q*H(q)*H(q^4)", F("f10^5 / f2 f5^2 f20^2"),
     "G(q)G(q^4) - qH(q)H(q^4)", {"aliases": ("I.Rama1",)}),
    ("L2.5.2", "G(-q)*G(-q^4) + q*H(-q)*H(-q^4)", F("f4^2 / f2 f8"),
     "G(-q)G(-q^4) + qH(-q)H(-q^4)", {"aliases": ("I.Rama2",)}),
    ("L2.5.3", "G(q^16)*H(q) - q^3*G(q)*H(q^16)", F("f4^2 / f2 f8"),
     "G(q^16)H(q) - q^3 G(q)H(q^16)", {"aliases": ("I.Rama3",)}),
    ("L2.5.4", "G(q)^2*H(q^2) - G(q^2)*H(q)^2", f"2*q*H(q)*H(q^2)^2*{F('f10^2 / f5^2')}",
     "G^2(q)H(q^2) - G(q^2)H^2(q)", {"aliases": ("I.RobinsKey1",)}),
    ("L2.5.5", "G(q)^2*H(q^2) + G(q^2)*H(q)^2", f"2*G(q)*G(q^2)^2*{F('f10^2 / f5^2')}",
     "G^2(q)H(q^2) + G(q^2)H^2(q)", {"aliases": ("I.RobinsKey2",)}),
    ("L2.6.1", GH1, f"{F('f2 f10^9 / f1 f4 f5^5 f20^3')} + 4*q^2*{F('f4 f20^3 / f2^2 f5^2')}",
     "G^3(q^2)H(q) + qG(q)H^3(q^2)", {"aliases": ("I.newGH1",)}),
    ("L2.6.2", "G(q^16)*H(q) + q^3*G(q)*H(q^16)", f"{F('f20^2 / f2 f40')} + 2*q^3*{F('f8 f80 / f2 f16')}",
     "G(q^16)H(q) + q^3 G(q)H(q^16)", {"aliases": ("I.newGH2",)}),
    ("L2.6.3", "G(-q)*G(-q^4) - q*H(-q)*H(-q^4)",
     f"{F('f20^2 / f2 f40')} - 2*q*{F('f4 f16 f40^3 / f2 f8^2 f20 f80')}",
     "G(-q)G(-q^4) - qH(-q)H(-q^4)", {"aliases": ("I.newGH3",)}),
    # Rogers-Ramanujan continued fraction at q and q^5
    ("L2.7.1", "R(q)^5/R(q^5)", f"{_N5}/{_D5}", "R^5(q)/R(q^5) as a rational function of R(q^5)",
     {"aliases": ("I.R5q5",)}),
    ("L2.7.2", _N5, f"R(q^5)^2*H(q)^5*f(1)^2/(H(q^5)*f(25)^2)", "numerator quartic in R(q^5)",
     {"aliases": ("I.R5q5N",)}),
    ("L2.7.3", _D5, f"R(q^5)^2*G(q)^5*f(1)^2/(G(q^5)*f(25)^2)", "denominator quartic in R(q^5)",
     {"aliases": ("I.R5q5D",)}),
    # S, T relations
    ("L2.8.1", "S(-q)*T(q)*S(q^4) - q^2*S(q)*T(-q)*T(q^4)", F("f1 f16^3 / f2 f4 f8 f32"),
     "S(-q)T(q)S(q^4) - q^2 S(q)T(-q)T(q^4)", {"aliases": ("I.ST1",)}),
    ("L2.8.2", "S(-q)*T(q)*S(q^4) + q^2*S(q)*T(-q)*T(q^4)",
     f"{F('f1 f8^4 f16 / f2^3 f4^2 f32')} + 4*q^3*{F('f1 f32^3 / f2^3 f16')}",
     "S(-q)T(q)S(q^4) + q^2 S(q)T(-q)T(q^4)", {"aliases": ("I.ST2",)}),
    ("L2.8.3", "S(q)*T(q)", F("f2 f8^2 / f1 f4^2"), "S(q)T(q) as an eta quotient", {"aliases": ("I.STf.1",)}),
    ("L2.8.4", "theta(-1,-7)", f"f(8)^2/(S(q)*f(4))", "f(-q,-q^7) through S(q)", {"aliases": ("I.STf.2",)}),
    ("L2.8.5", "theta(-3,-5)", f"f(8)^2/(T(q)*f(4))", "f(-q^3,-q^5) through T(q)", {"aliases": ("I.STf.3",)}),
    # X, Y relations
    ("L2.9.1", "X(q)*Y(q^3) + q^2*X(q^3)*Y(q)", F("f4 f6^5 f9 f36 / f2^2 f3^3 f12^2 f18"),
     "X(q)Y(q^3) + q^2 X(q^3)Y(q)", {"aliases": ("I.BBXY1",)}),
    ("L2.9.2", "X(q)*Y(q^3) - q^2*X(q^3)*Y(q)", F("f18^2 / f3 f9"),
     "X(q)Y(q^3) - q^2 X(q^3)Y(q)", {"aliases": ("I.RobinsXY1",)}),
    ("L2.9.3", "X(q)*Y(q^2) - q*X(q^2)*Y(q)", F("f1 f6 f24 / f2^2 f3"),
     "X(q)Y(q^2) - qX(q^2)Y(q)", {"aliases": ("I.newXY1",)}),
    ("L2.9.4", "Y(q^2)*Y(q) - q^3*X(q^2)*X(q)",
     f"{F('f2^3 f8 f12^5 / f1^2 f4^3 f6^2 f24^2')} - q*{F('f1 f6 f24 / f2^2 f3')}",
     "Y(q^2)Y(q) - q^3 X(q^2)X(q)", {"aliases": ("I.newXY2",)}),
]

# identities displayed inside the lemma proofs
LEMMA_PROOFS = [
    ("I.NewGH1Key11", "theta(+1,+4)^2", "theta(+2,+8)*phi(q^5) + 2*q*theta(+3,+7)*psi(q^10)",
     "f^2(q,q^4) split by the squared-theta formula", {}),
    ("I.NewGH1Key21", "theta(+2,+3)^2", "theta(+4,+6)*phi(q^5) + 2*q^2*theta(+1,+9)*psi(q^10)",
     "f^2(q^2,q^3) split by the squared-theta formula", {}),
    ("I.gh1", "theta(+4,+6)*theta(-3,-7) + q*theta(+2,+8)*theta(-1,-9)", f"{fq(1)}*{fq(5)}",
     "f(q^4,q^6)f(-q^3,-q^7) + qf(q^2,q^8)f(-q,-q^9) = f(q)f(q^5)", {}),
    ("I.gh2", "theta(-3,-7)*theta(+1,+9) + theta(+3,+7)*theta(-1,-9)", "2*f(4)*f(20)",
     "f(-q^3,-q^7)f(q,q^9) + f(q^3,q^7)f(-q,-q^9) = 2 f4 f20", {}),
    ("I.QQQ", "theta(+2,+3)^2*theta(-3,-7) + q*theta(+1,+4)^2*theta(-1,-9)",
     f"{fq(1)}*{fq(5)}*phi(q^5) + 4*q^2*f(4)*f(20)*psi(q^10)", "combined cubic theta relation", {}),
    ("I.GHtheta.1", "theta(+1,+4)", "f(5)*G(q)/G(q^2)", "f(q,q^4) through G", {}),
    ("I.GHtheta.2", "theta(-1,-9)", "f(10)*H(q^2)/G(q)", "f(-q,-q^9) through G, H", {}),
    ("I.GHtheta.3", "theta(+2,+3)", "f(5)*H(q)/H(q^2)", "f(q^2,q^3) through H", {}),
    ("I.GHtheta.4", "theta(-3,-7)", "f(10)*G(q^2)/H(q)", "f(-q^3,-q^7) through G, H", {}),
    ("I.GHf5", "G(q)*H(q)", "f(5)/f(1)", "G(q)H(q) = f5/f1", {}),
    ("I.fq", fq(1), F("f2^3 / f1 f4"), "f(q) = f2^3/(f1 f4)", {}),
    ("I.2-dissectGH.1", "G(q)", "f(8)/f(2)*(G(q^16) + q*H(-q^4))", "2-dissection of G", {}),
    ("I.2-dissectGH.2", "H(q)", "f(8)/f(2)*(G(-q^4) + q^3*H(q^16))", "2-dissection of H", {}),
    ("I.Modular5Key2", "G(q^16)*H(q) + q^3*G(q)*H(q^16)",
     "f(8)/f(2)*(2*q^3*G(q^16)*H(q^16) + G(-q^4)*G(q^16) + q^4*H(-q^4)*H(q^16))",
     "G(q^16)H(q) + q^3 G(q)H(q^16) regrouped", {}),
    ("I.M2", "G(-q^4)*G(q^16) + q^4*H(-q^4)*H(q^16)", F("f20^2 / f8 f40"),
     "G(-q^4)G(q^16) + q^4 H(-q^4)H(q^16)", {}),
    ("I.M2.product", F("f40^5 / f8 f80^2") + f"/{fq(20)}^2", F("f20^2 / f8 f40"), "f(q^20) rewritten", {}),
    ("I.M3", "G(-q)*G(-q^4) - q*H(-q)*H(-q^4)",
     "f(8)/f(2)*(G(-q^4)*G(q^16) + q^4*H(-q^4)*H(q^16) - 2*q*G(-q^4)*H(-q^4))",
     "G(-q)G(-q^4) - qH(-q)H(-q^4) regrouped", {}),
    ("I.q35", "theta(-3,-5)*theta(+3,+5)*theta(+6,+10)", "theta(-12,-20)*theta(-8,-8)*theta(-16,-16)",
     "product relation for f(q^3,q^5)", {}),
    ("I.q17", "theta(-1,-7)*theta(+1,+7)*theta(+2,+14)", "theta(-4,-28)*theta(-8,-8)*theta(-16,-16)",
     "product relation for f(q,q^7)", {}),
    ("I.Multi-q", "theta(+1,+7)^2", "theta(+2,+14)*phi(q^8) + 2*q*theta(+6,+10)*psi(q^16)",
     "f^2(q,q^7) split", {}),
    ("I.ThenAdd", "theta(+3,+5)^2", "theta(+6,+10)*phi(q^8) + 2*q^3*theta(+2,+14)*psi(q^16)",
     "f^2(q^3,q^5) split", {}),
    ("I.Reduce1", "theta(+3,+5)^2 + q*theta(+1,+7)^2",
     "(theta(+6,+10) + q*theta(+2,+14))*(phi(q^8) + 2*q^2*psi(q^16))", "sum of the two splits", {}),
    ("I.phi-2.1", "phi(q)", "phi(q^4) + q*theta(+0,+8)", "phi(q) = phi(q^4) + q f(1,q^8)", {}),
    ("I.phi-2.2", "phi(q)", "phi(q^4) + 2*q*psi(q^8)", "2-dissection of phi", {}),
    ("I.psi-2", "psi(q)", "theta(+6,+10) + q*theta(+2,+14)", "2-dissection of psi", {}),
    ("I.Reduced", "theta(+3,+5)^2 + q*theta(+1,+7)^2", F("f4^5 / f1 f8^2"),
     "f^2(q^3,q^5) + qf^2(q,q^7) = f4^5/(f1 f8^2)", {}),
    ("I.Modular8Key2", "theta(+3,+5)^2*theta(+6,+10) + q^2*theta(+1,+7)^2*theta(+2,+14)",
     "(theta(+6,+10)^2 + q^2*theta(+2,+14)^2)*phi(q^8) + 4*q^3*theta(+2,+14)*theta(+6,+10)*psi(q^16)",
     "weighted sum of the two splits", {}),
    ("I.Modular8Key3", "theta(-1,-7)*theta(+3,+5)*theta(-12,-20) + q^2*theta(+1,+7)*theta(-3,-5)*theta(-4,-28)",
     f"{F('f1 f8^3 f16^2 / f2^2 f32')} + 4*q^3*{F('f1 f4^2 f32^3 / f2^2 f8')}",
     "theta form equivalent to the second S, T relation", {}),
    ("I.Modular12.1", "theta(+5,+7)*theta(-5,-7)", "theta(-10,-14)*theta(-12,-12)",
     "f(q^5,q^7)f(-q^5,-q^7)", {}),
    ("I.Modular12.2", "theta(+1,+11)*theta(-1,-11)", "theta(-2,-22)*theta(-12,-12)",
     "f(q,q^11)f(-q,-q^11)", {}),
    ("I.Modular12Key11", "theta(+5,+7) - q*theta(+1,+11)", "f(1)", "f(q^5,q^7) - qf(q,q^11) = f1", {}),
    ("I.Modular12Key121", "theta(-2,+4)", "theta(-10,-14) - q^2*theta(-2,-22)", "f(-q^2,q^4) split", {}),
]

# identities displayed in the proofs of the matching theorems
PROOFS = [
    # p-dissection consequences and the delta family
    ("I.3f1a", "f(1)^3/f(3)^3",
     f"{F('f6 f9^6 / f3^4 f18^3')} - 3*q*{F('f9^3 / f3^3')} + 4*q^3*{F('f18^6 / f3 f6^2 f9^3')}",
     "3-dissection of f1^3/f3^3", {}),
    ("I.3f1f2a", "f(1)*f(2)/(f(3)*f(6))",
     f"{F('f9^4 / f3^2 f18^2')} - q*{F('f9 f18 / f3 f6')} - 2*q^2*{F('f18^4 / f6^2 f9^2')}",
     "3-dissection of f1 f2/(f3 f6)", {}),
    ("I.delta47", "f(1)*f(4)/(f(7)*f(28))", "q*f(7)*f(28)/(f(1)*f(4))",
     "U_{7n+3} of f1 f4/(f7 f28)",
     {"extract": (7, 3),
      "printed_lhs": "f(1)*f(4)/(f(11)*f(44))", "printed_rhs": "q*f(11)*f(44)/(f(1)*f(4))",
      "erratum": "printed with f11 f44 in place of f7 f28 on both sides"}),
    # modular equation of degree 5
    ("I.ana1", "chi(-q)^5/chi(-q^5) + chi(q)^5/chi(q^5) + 2", "4*chi(-q^10)/chi(-q^2)^5",
     "(q;q^2)^5/(q^5;q^10) + (-q;q^2)^5/(-q^5;q^10) + 2 = 4(q^10;q^20)/(q^2;q^4)^5", {}),
    # Rogers-Ramanujan continued fraction family
    ("I.Lambda1.1", "R(q)^-5 + q^2*R(q)^5",
     f"f(1)*f(25)^5/(R(q^5)^5*f(5)^6)*(1 + 6*q*{R5} + 18*q^2*{R5}^2 + 24*q^3*{R5}^3 + 42*q^4*{R5}^4"
     f" + 42*q^6*{R5}^6 - 24*q^7*{R5}^7 + 18*q^8*{R5}^8 - 6*q^9*{R5}^9 + q^10*{R5}^10)",
     "1/R^5 + q^2 R^5 in terms of R(q^5)",
     {"printed_rhs": f"f(1)*f(25)^5/(R(q^5)*f(5)^6)*(1 + 6*q*{R5} + 18*q^2*{R5}^2 + 24*q^3*{R5}^3"
                     f" + 42*q^4*{R5}^4 + 42*q^6*{R5}^6 - 24*q^7*{R5}^7 + 18*q^8*{R5}^8 - 6*q^9*{R5}^9"
                     f" + q^10*{R5}^10)",
      "erratum": "printed with R(q^5) to the first power in the prefactor; R^5(q^5) is needed"}),
    ("I.Lambda1.2", "R(q)^-5 + q^2*R(q)^5",
     f"{F('f25^6 / f5^6')}*({R5}^-6 + 5*q*{R5}^-5 + 11*q^2*{R5}^-4 - 66*q^5*{R5}^-1 - 66*q^7*{R5}"
     f" - 11*q^10*{R5}^4 + 5*q^11*{R5}^5 - q^12*{R5}^6)",
     "1/R^5 + q^2 R^5 as a Laurent polynomial in R(q^5)", {}),
    ("I.Lambda3.1", LAM3, f"2*{F('f1 f2 f10 / f5^3')}*{GH1}", "R^2(q)/R(q^2) + R(q^2)/R^2(q) via G, H", {}),
    ("I.Ident4.1", LAM3, f"2*{F('f2^2 f10^10 / f4 f5^8 f20^3')} + 8*q^2*{F('f1 f4 f10 f20^3 / f2 f5^5')}",
     "R^2(q)/R(q^2) + R(q^2)/R^2(q) as eta quotients", {"aliases": ("I.Ident4",)}),
    ("I.Ident4.2", LAM3, f"2*{F('f10^10 / f5^8 f20^3')}*phi(-q^2) + 8*q^2*{F('f10 f20^3 / f5^5')}*psi(-q)",
     "R^2(q)/R(q^2) + R(q^2)/R^2(q) through phi, psi", {}),
    ("I.Ident4.3", LAM3,
     f"2*{F('f10^10 / f5^8 f20^3')}*(phi(-q^50) - 2*q^2*theta(-30,-70) + 2*q^8*theta(-10,-90))"
     f" + 8*q^2*{F('f10 f20^3 / f5^5')}*(theta(+10,-15) - q*theta(-5,+20) - q^3*psi(-q^25))",
     "R^2(q)/R(q^2) + R(q^2)/R^2(q), 5-dissected", {}),
    ("I.RobinsKey3", "1 + q*H(q)*H(q^2)^2/(G(q)*G(q^2)^2)", f"G(q)*H(q^2)/G(q^2)^2*{F('f5^2 / f10^2')}",
     "1 + qH(q)H^2(q^2)/(G(q)G^2(q^2))", {}),
    ("I.RobinsKey4", "G(q)*G(q^2)^2/(H(q)*H(q^2)^2) - q", f"G(q^2)*H(q)/H(q^2)^2*{F('f5^2 / f10^2')}",
     "G(q)G^2(q^2)/(H(q)H^2(q^2)) - q", {}),
    ("I.Lambda4.1", "1/(R(q)*R(q^2)^2) + q^2*R(q)*R(q^2)^2", f"{F('f5^2 f2^2 / f10^4')}*{GH1}",
     "1/(R(q)R^2(q^2)) + q^2 R(q)R^2(q^2) via G, H", {}),
    ("I.Lambda4.2", "1/(R(q)*R(q^2)^2) + q^2*R(q)*R(q^2)^2",
     f"{F('f2^3 f10^5 / f1 f4 f5^3 f20^3')} + 4*q^2*{F('f4 f20^3 / f10^4')}",
     "1/(R(q)R^2(q^2)) + q^2 R(q)R^2(q^2) as eta quotients", {}),
    ("I.Lambda4.3", "1/(R(q)*R(q^2)^2) + q^2*R(q)*R(q^2)^2",
     f"{fq(1)}*{F('f10^5 / f5^3 f20^3')} + 4*q^2*f(4)*{F('f20^3 / f10^4')}",
     "1/(R(q)R^2(q^2)) + q^2 R(q)R^2(q^2) through f(q)", {}),
    ("I.Lambda4.4", "1/(R(q)*R(q^2)^2) + q^2*R(q)*R(q^2)^2",
     f"{F('f10^5 / f5^3 f20^3')}*{fq(25)}*(1/R(-q^5) + q - q^2*R(-q^5))"
     f" + 4*q^2*{F('f20^3 f100 / f10^4')}*(1/R(q^20) - q^4 - q^8*R(q^20))",
     "1/(R(q)R^2(q^2)) + q^2 R(q)R^2(q^2), 5-dissected", {}),
    ("I.GuggMu1.1", f"(1 + {RR4})/(1 - {RR4})", "phi(q)/phi(q^5)", "(1 + qR(q)R(q^4))/(1 - qR(q)R(q^4))", {}),
    ("I.GuggMu1.2", "phi(q)/phi(q^5)", F("f2^5 f5^2 f20^2 / f1^2 f4^2 f10^5"), "phi(q)/phi(q^5)", {}),
    ("I.GuggMu2.1", f"R(q)*R(q^4)/(1 - {RR4})^2", "chi(q)/chi(q^5)^5",
     "R(q)R(q^4)/(1 - qR(q)R(q^4))^2", {}),
    ("I.GuggMu2.2", "chi(q)/chi(q^5)^5", F("f2^2 f5^5 f20^5 / f1 f4 f10^10"), "(-q;q^2)/(-q^5;q^10)^5", {}),
    ("I.RqRq4.1", "1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4)", F("f2^3 f10^5 / f1 f4 f5^3 f20^3"),
     "1/(R(q)R(q^4)) - q^2 R(q)R(q^4)", {"aliases": ("I.RqRq4",)}),
    ("I.RqRq4.2", "1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4)", f"{F('f10^5 / f5^3 f20^3')}*{fq(1)}",
     "1/(R(q)R(q^4)) - q^2 R(q)R(q^4) through f(q)", {}),
    ("I.RqRq4.3", "1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4)",
     f"{F('f10^5 / f5^3 f20^3')}*{fq(25)}*(1/R(-q^5) + q - q^2*R(-q^5))",
     "1/(R(q)R(q^4)) - q^2 R(q)R(q^4), 5-dissected", {}),
    ("I.Lambda6", LAM6,
     f"({F('f2 f8^2 f20^4 f80 / f10^3 f16 f40^4')} - 2*q*{F('f2 f4 f20 / f10^3')})*{F('f5 / f1')}",
     "1/(R(-q)R(-q^4)) - q^2 R(-q)R(-q^4)", {}),
    ("I.E_6Trick1.1", LAM6,
     f"{F('f2^3 f4 f10^3 f40 / f1^2 f5^2 f8 f20^3')} - 2*{F('f2 f4 f10^3 / f1 f5^3 f20')}",
     "odd part of 1/(R(-q)R(-q^4)) - q^2 R(-q)R(-q^4)", {"extract": (2, 1), "aliases": ("I.E_6Trick1",)}),
    ("I.E_6Trick1.2", LAM6,
     f"{F('f2 f4 f10^3 f40 / f1 f5^3 f8 f20^3')}*({F('f2^2 f5 / f1')} - 2*{F('f8 f20^2 / f40')})",
     "odd part, factored", {"extract": (2, 1)}),
    ("I.E_6Trick2", "theta(+1,+9)*theta(+3,+7) + theta(-1,-9)*theta(-3,-7)", "2*theta(+4,+16)*theta(+8,+12)",
     "f(q,q^9)f(q^3,q^7) + f(-q,-q^9)f(-q^3,-q^7)", {}),
    ("I.E_6Trick3.1", "theta(-1,-9)*theta(-3,-7)", F("f1 f10^3 / f2 f5"), "f(-q,-q^9)f(-q^3,-q^7)",
     {"aliases": ("I.E_6Trick3",)}),
    ("I.E_6Trick3.2", "theta(+1,+4)*theta(+2,+3)", F("f2 f5^3 / f1 f10"), "f(q,q^4)f(q^2,q^3)", {}),
    ("I.Sameway1", f"{F('f2^2 f5 / f1')} - 2*{F('f8 f20^2 / f40')}", f"-{F('f1 f4 f10^3 / f2 f5 f20')}",
     "f2^2 f5/f1 - 2 f8 f20^2/f40",
     {"printed_rhs": f"-{F('f1 f4 f20^3 / f2 f5 f20')}",
      "erratum": "printed with f20^3 in the numerator where f10^3 is needed; the printed form fails"}),
    ("I.Lambda6.odd.1", LAM6, f"-{F('f4^2 f10^6 f40 / f8 f5^4 f20^4')}", "odd part, closed form",
     {"extract": (2, 1)}),
    ("I.Lambda6.odd.2", LAM6, f"-{F('f10^6 f40 / f5^4 f20^4')}*phi(-q^4)", "odd part through phi",
     {"extract": (2, 1)}),
    ("I.Lambda6.odd.3", LAM6,
     f"-{F('f10^6 f40 / f5^4 f20^4')}*(phi(-q^100) - 2*q^4*theta(-60,-140) + 2*q^16*theta(-20,-180))",
     "odd part, 5-dissected", {"extract": (2, 1)}),
    ("I.Lam7", "R(q)^4/R(q^4) + R(q^4)/R(q)^4",
     f"R(q^4)/R(q^2)^2 + R(q^2)^2/R(q^4) - (R(q^2)/R(q)^2 - R(q)^2/R(q^2))*({U10} - 1/{U10})",
     "R^4(q)/R(q^4) + R(q^4)/R^4(q) rearranged", {}),
    ("I.Lam8", "R(q)^2/R(q^4)^3 + q^4*R(q^4)^3/R(q)^2",
     f"({U10} - 1/{U10})*(1/(R(q^2)*R(q^4)^2) - q^4*R(q^2)*R(q^4)^2)"
     f" + (1/(R(q)*R(q^2)^2) - q^2*R(q)*R(q^2)^2)*(1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4))"
     f" + q^2*(R(q^2)^2/R(q^4) + R(q^4)/R(q^2)^2)",
     "R^2(q)/R^3(q^4) + q^4 R^3(q^4)/R^2(q) rearranged",
     {"printed_rhs": f"({U10} - 1/{U10})*(1/(R(q^2)*R(q^4)^2) - q^4*R(q^2)*R(q^4)^2)"
                     f" + (1/(R(q)*R(q^2)^2) - q^2*R(q)*R(q^2)^2)*(1/(R(q)*R(q^4)) - q^2*R(q)*R(q^4))"
                     f" + q^2*(R(q)^2/R(q^2) + R(q^2)/R(q)^2)",
      "erratum": "printed with the last bracket at q instead of q^2"}),
    ("I.Ident3", "1/(R(q)*R(q^2)^2) - q^2*R(q)*R(q^2)^2", F("f2 f5^5 / f1 f10^5"),
     "1/(R(q)R^2(q^2)) - q^2 R(q)R^2(q^2)", {}),
    ("I.Ident8", "R(q^2)/R(q)^2 - R(q)^2/R(q^2)", f"4*q*{F('f1 f10^5 / f2 f5^5')}",
     "R(q^2)/R^2(q) - R^2(q)/R(q^2)", {}),
    ("I.GuggMu11.1", f"q*psi(q^10)*(1 + {U10})", f"psi(q^2)*(1 - {U10})",
     "(1 + u)/(1 - u) = psi(q^2)/(q psi(q^10)), u = R^2(q)R(q^2)/R(q^4), cross-multiplied",
     {"aliases": ("I.GuggMu11",)}),
    ("I.GuggMu11.2", f"q*{F('f2 f20^2')}*(1 + {U10})", f"{F('f4^2 f10')}*(1 - {U10})",
     "(1 + u)/(1 - u) = f4^2 f10/(q f2 f20^2), cross-multiplied", {}),
    ("I.GuggMu22", f"4*q^2*{U10}*{F('f2 f20^5')}", f"{F('f4 f10^5')}*(1 - {U10})^2",
     "4u/(1 - u)^2 = f4 f10^5/(q^2 f2 f20^5), cross-multiplied", {}),
    ("I.Ident2", f"{U10} - 1/{U10}", f"-4*q*{F('f4 f20^3 / f10^4')}",
     "R^2(q)R(q^2)/R(q^4) - R(q^4)/(R^2(q)R(q^2))", {}),
    ("I.Lambda7", "R(q)^4/R(q^4) + R(q^4)/R(q)^4",
     f"2*{F('f4^2 f20^10 / f8 f10^8 f40^3')} + 16*q^2*{F('f4 f10 f20^3 / f2')}*{F('f1 / f5')}/f(5)^4"
     f" + 8*q^4*{F('f2 f8 f20 f40^3 / f4 f10^5')}",
     "R^4(q)/R(q^4) + R(q^4)/R^4(q) as eta quotients", {}),
    ("I.Lambda7.odd.1", "R(q)^4/R(q^4) + R(q^4)/R(q)^4",
     f"-16*q*{F('f10^17 / f5^15 f20^3')}*{fq(1)} + 64*q^3*{F('f10^8 f20^3 / f5^12')}*f(4)",
     "odd part of R^4(q)/R(q^4) + R(q^4)/R^4(q)", {"extract": (2, 1)}),
    ("I.Lambda7.odd.2", "R(q)^4/R(q^4) + R(q^4)/R(q)^4",
     f"-16*q*{F('f10^17 / f5^15 f20^3')}*{fq(25)}*(1/R(-q^5) + q - q^2*R(-q^5))"
     f" + 64*q^3*{F('f10^8 f20^3 f100 / f5^12')}*(1/R(q^20) - q^4 - q^8*R(q^20))",
     "odd part, 5-dissected",
     {"extract": (2, 1),
      "printed_rhs": f"-16*q*{F('f10^17 / f5^15 f20^3')}*{fq(25)}*(1/R(-q^5) + q - q^2*R(-q^5))"
                     f" + 64*q^3*{F('f10^8 f20^3 f100 / f5^12')}*f(25)*(1/R(q^20) - q^4 - q^8*R(q^20))",
      "erratum": "printed with a stray f25 in the second term"}),
    ("I.Lambda8", "R(q)^2/R(q^4)^3 + q^4*R(q^4)^3/R(q)^2",
     f"{F('f2^4 / f4 f20^3')}*{F('f5^2 / f1^2')} - 4*q*{F('f4^2 f10 / f2 f20^2')}"
     f" + 2*q^2*{F('f4^2 f20^10 / f8 f10^8 f40^3')} + 8*q^6*{F('f2 f8 f20 f40^3 / f4 f10^5')}",
     "R^2(q)/R^3(q^4) + q^4 R^3(q^4)/R^2(q) as eta quotients", {}),
    ("I.Lambda8.odd.1", "R(q)^2/R(q^4)^3 + q^4*R(q^4)^3/R(q)^2", f"-2*{F('f2^2 f5 / f1 f10^2')}",
     "odd part of R^2(q)/R^3(q^4) + q^4 R^3(q^4)/R^2(q)",
     {"extract": (2, 1), "printed_rhs": f"-2*{F('f2^2 f5 / f1 f10')}",
      "erratum": "printed with f10 where f10^2 is needed; the printed form fails at n=10"}),
    ("I.Lambda8.odd.2", "R(q)^2/R(q^4)^3 + q^4*R(q^4)^3/R(q)^2",
     f"-2*{F('f5 / f10^2')}*(theta(+10,+15) + q*theta(+5,+20) + q^3*psi(q^25))",
     "odd part, 5-dissected",
     {"extract": (2, 1),
      "printed_rhs": f"-2*{F('f5 / f10')}*(theta(+10,+15) + q*theta(+5,+20) + q^3*psi(q^25))",
      "erratum": "printed with f10 where f10^2 is needed"}),
    ("I.Lambda9.1", LAM9, f"{F('f1 f16 / f5 f80')}*(G(q^16)^2*H(q)^2 - q^6*G(q)^2*H(q^16)^2)",
     "R(q)/R(q^16) - q^6 R(q^16)/R(q) via G, H", {}),
    ("I.Lambda9.2", LAM9,
     f"({F('f4^2 f16 f20^2 / f2^2 f8 f40 f80')} + 2*q^3*{F('f4^2 / f2^2')})*{F('f1 / f5')}",
     "R(q)/R(q^16) - q^6 R(q^16)/R(q) as eta quotients", {}),
    ("I.N5Trick1", LAM9,
     f"-{F('f2^2 f8 f10^2 / f1 f4 f5^3 f20 f40')}*({F('f2^2 f5 f20 / f1 f4')} - 2*q*{F('f4^2 f10 f40 / f2 f8')})",
     "odd part of R(q)/R(q^16) - q^6 R(q^16)/R(q)", {"extract": (2, 1)}),
    ("I.theta-diff-1379", "theta(+1,+9)*theta(+3,+7) - theta(-1,-9)*theta(-3,-7)",
     "2*q*theta(+2,+18)*theta(+6,+14)", "f(q,q^9)f(q^3,q^7) - f(-q,-q^9)f(-q^3,-q^7)", {}),
    ("I.ixnew", f"{F('f2^2 f5 f20 / f1 f4')} - 2*q*{F('f4^2 f10 f40 / f2 f8')}", F("f1 f10^3 / f2 f5"),
     "f2^2 f5 f20/(f1 f4) - 2q f4^2 f10 f40/(f2 f8)", {}),
    ("I.Lambda9.odd.1", LAM9, f"-{F('f2 f8 f10^5 / f4 f5^4 f20 f40')}", "odd part, closed form",
     {"extract": (2, 1)}),
    ("I.Lambda9.odd.2", LAM9, f"-{F('f10^5 / f5^4 f20 f40')}*psi(-q^2)", "odd part through psi",
     {"extract": (2, 1)}),
    ("I.Lambda9.odd.3", LAM9,
     f"-{F('f10^5 / f5^4 f20 f40')}*(theta(+20,-30) - q^2*theta(-10,+40) - q^6*psi(-q^50))",
     "odd part, 5-dissected", {"extract": (2, 1)}),
    ("I.Lambda10.sum", f"{U10} + 1/{U10}", f"2 + 4*q^2*{F('f2 f20^5 / f4 f10^5')}",
     "R^2(q)R(q^2)/R(q^4) + R(q^4)/(R^2(q)R(q^2))", {}),
    ("I.Lambda10.diff", f"{U10} - 1/{U10}",
     f"-4*q*{F('f20^3 f100 / f10^4')}*(1/R(q^20) - q^4 - q^8*R(q^20))",
     "R^2(q)R(q^2)/R(q^4) - R(q^4)/(R^2(q)R(q^2)), 5-dissected", {}),
    # Ramanujan-Goellnitz-Gordon family
    ("I.P1.1", f"{W} + q^4/{W}", f"2*q^2 + {F('f4^2 f16^8 / f2 f8^7 f32^4')}*f(1)^2",
     "rho + q^4/rho for the S, T quotient", {}),
    ("I.P1.2", f"{W} + q^4/{W}", f"2*q^2 + {F('f16^6 / f8^2 f32^4')} - 2*q*{F('f4^2 f16^10 / f8^8 f32^4')}",
     "rho + q^4/rho, 2-dissected",
     {"printed_rhs": f"2*q^2 + {F('f16^6 / f8^2 f32^4')} - 2*q*{F('f4^2 f16^10 / f8^8')}",
      "erratum": "printed without f32^4 in the denominator of the odd term"}),
    ("I.P2.1", f"{W} - q^4/{W}",
     "((S(-q)*T(q)*S(q^4))^2 - q^4*(S(q)*T(-q)*T(q^4))^2)"
     "/(S(q)*T(q)*S(-q)*T(-q)*S(q^4)*T(q^4))",
     "rho - q^4/rho over a common denominator",
     {"aliases": ("I.P2",),
      "printed_rhs": "((S(-q)*T(q)*S(q^4))^2 - q^4*S(q)*T(-q)*T(q^4))"
                     "/(S(q)*T(q)*S(-q)*T(-q)*S(q^4)*T(q^4))",
      "erratum": "printed without the square on the second product in the numerator"}),
    ("I.P2.2", f"{W} - q^4/{W}",
     f"({F('f4 f16^6 / f2^3 f8^2 f32^4')} + 4*q^3*{F('f4^3 f16^4 / f2^3 f8^6')})*f(1)^2",
     "rho - q^4/rho as eta quotients", {}),
    ("I.P2.3", f"{W} - q^4/{W}",
     f"({F('f4 f16^6 / f2^3 f8^2 f32^4')} + 4*q^3*{F('f4^3 f16^4 / f2^3 f8^6')})"
     f"*({F('f2 f8^5 / f4^2 f16^2')} - 2*q*{F('f2 f16^2 / f8')})",
     "rho - q^4/rho, 2-dissected", {}),
    ("I.P2.odd", f"{W} - q^4/{W}",
     f"(-2*{F('f2 f8^8 / f4^3 f16^4')} + 4*q*{F('f2 f8^2 / f4')})/f(1)^2",
     "odd part of rho - q^4/rho", {"extract": (2, 1)}),
    ("I.GoOne", f"{W} - q^4/{W}",
     f"-2*{F('f8^13 / f2^4 f4^3 f16^6')} + 8*q^2*{F('f4 f8 f16^2 / f2^4')}",
     "odd part of rho - q^4/rho, 2-dissected", {"extract": (2, 1)}),
    ("I.P2.4n1.1", f"{W} - q^4/{W}",
     f"-2*{F('f4^13 / f1^4 f2^3 f8^6')} + 8*q*{F('f2 f4 f8^2 / f1^4')}",
     "U_{4n+1} of rho - q^4/rho", {"extract": (4, 1)}),
    ("I.P2.4n1.2", f"{W} - q^4/{W}",
     f"-2*{F('f4^27 / f2^17 f8^10')} + 32*q^2*{F('f4^3 f8^6 / f2^9')}",
     "U_{4n+1} of rho - q^4/rho, 2-dissected", {"extract": (4, 1)}),
    ("I.P3.1", f"{W}^2 + q^8/{W}^2", f"({W} - q^4/{W})^2 + 2*q^4", "rho^2 + q^8/rho^2 = (rho - q^4/rho)^2 + 2q^4", {}),
    ("I.P3.2", f"{W}^2 + q^8/{W}^2",
     f"{F('f1^4 f4^2 f16^12 / f2^6 f8^4 f32^8')} + 16*q^6*{F('f1^4 f4^6 f16^8 / f2^6 f8^12')}"
     f" + 8*q^3*{F('f1^4 f4^4 f16^10 / f2^6 f8^8 f32^4')} + 2*q^4",
     "rho^2 + q^8/rho^2 as eta quotients", {}),
    ("I.P3.even", f"{W}^2 + q^8/{W}^2",
     f"{F('f8^12 f2^12 / f1^8 f4^8 f16^8')} + 2*q^2 - 32*q^2*{F('f8^10 f2^2 / f1^4 f4^4 f16^4')}"
     f" + 16*q^3*{F('f8^8 f2^16 / f1^8 f4^16')}",
     "U_{2n} of rho^2 + q^8/rho^2", {"extract": (2, 0)}),
    ("I.P3.4n.1", f"{W}^2 + q^8/{W}^2",
     f"{F('f4^4 f2^20 / f1^16 f8^8')} + 2*q + 16*q*{F('f4^20 / f1^8 f2^4 f8^8')}"
     f" - 32*q*{F('f4^6 f2^10 / f1^12 f8^4')} + 128*q^2*{F('f4^8 / f1^8')}",
     "U_{4n} of rho^2 + q^8/rho^2", {"extract": (4, 0)}),
    ("I.P3.4n.2", f"{W}^2 + q^8/{W}^2",
     f"{F('f4^60 / f2^36 f8^24')} + 2*q - 32*q^2*{F('f4^36 / f2^28 f8^8')} + 256*q^4*{F('f8^8 f4^12 / f2^20')}",
     "U_{4n} of rho^2 + q^8/rho^2, 2-dissected", {"extract": (4, 0)}),
    # Slater X, Y family
    ("I.XYq", "X(q)*Y(q)", F("f12^2 f6 / f1 f2 f3"), "X(q)Y(q) as an eta quotient", {}),
    ("I.First12Gen", f"{XI} - q^8/{XI}",
     f"{F('f4 f6^5 f18^3 / f12^6 f36^3')}*{F('f1^2 / f3^2')}"
     f" + 2*q^2*{F('f4 f6^5 f9 / f2 f3 f12^4 f36')}*{F('f1 / f3')}",
     "xi - q^8/xi, first eta form",
     {"printed_rhs": f"{F('f4 f6^5 f18^3 / f12^6 f36^3')}*{F('f1^2 / f3^2')}"
                     f" + 2*q^2*{F('f4 f6^5 f9 / f2 f3^2 f12^4 f36')}*{F('f1 / f3')}*{F('f9 / f3')}",
      "erratum": "printed second term carries an extra f9/f3^2 and fails"}),
    ("I.Second12Gen", f"{XI} - q^8/{XI}",
     f"{F('f6^15 f9^4 / f3^6 f12^10 f18^3 f36')}*{F('f1^2 f4^2 / f2^2')}*{F('f4 / f2^2')}"
     f" - 2*q^2*{F('f6^5 f9 / f3^2 f12^4 f36')}*{F('f1 f4 / f2')}",
     "xi - q^8/xi, second eta form", {}),
    ("I.Xi.even", f"{XI} - q^8/{XI}",
     f"{F('f1 f2^3 f9^3 / f4 f6^2 f12 f18^3')} + 2*q*{F('f2 f3 f8 f9 f12 f36^2 / f4 f6^3 f18^2 f72')}"
     f" - 2*q^3*{F('f3 f4^2 f9 f12 f72 / f6^3 f8 f18 f36')}",
     "U_{2n} of xi - q^8/xi", {"extract": (2, 0)}),
    ("I.U24n+14.1", f"{XI} - q^8/{XI}",
     f"-6*{F('f2^4 f3^3 / f1^7')} + 4*{F('f4^4 f6^11 / f1^4 f2 f3^6 f12^4')}"
     f" + 2*{F('f2^8 f6^8 / f1^7 f3^5 f4^2 f12^2')} + 8*q*{F('f2^2 f4^2 f6^2 f12^2 / f1^5 f3^3')}"
     f" + 4*q*{F('f2^11 f12^4 / f1^8 f3^2 f4^4 f6')}",
     "U_{24n+14} of xi - q^8/xi as a sum of eta quotients", {"extract": (24, 14)}),
    ("I.U24n+14.2", f"-6*{F('f2^4 f3^3 / f1^7')} + 4*{F('f4^4 f6^11 / f1^4 f2 f3^6 f12^4')}"
     f" + 2*{F('f2^8 f6^8 / f1^7 f3^5 f4^2 f12^2')} + 8*q*{F('f2^2 f4^2 f6^2 f12^2 / f1^5 f3^3')}"
     f" + 4*q*{F('f2^11 f12^4 / f1^8 f3^2 f4^4 f6')}",
     f"-6*{F('f2^4 f3^3 / f1^7')} + (4*{F('f2^2 f4^3 f6^2 / f1^5 f3^3 f12')}"
     f" + 2*{F('f2^11 f12 / f1^8 f3^2 f4^3 f6')})*({F('f1 f4 f6^9 / f2^3 f3^3 f12^3')} + 2*q*{F('f12^3 / f4')})",
     "regrouping of the U_{24n+14} sum", {}),
    ("I.U24n+14.zero", f"{XI} - q^8/{XI}", "0", "U_{24n+14} of xi - q^8/xi vanishes",
     {"extract": (24, 14)}),
    ("I.TrickIden1", "f(3)^3/f(1)", f"{F('f1 f4 f6^9 / f2^3 f3^3 f12^3')} + 2*q*{F('f12^3 / f4')}",
     "f3^3/f1 through f(q)", {}),
    ("I.TrickIden1.diff", f"f(3)^3/f(1) - {fq(3)}^3/{fq(1)}", f"2*q*{F('f12^3 / f4')}",
     "f3^3/f1 - f^3(q^3)/f(q)", {}),
    ("I.U24n+14a", f"-6*{F('f2^4 f3^3 / f1^7')} + 4*{F('f2^2 f4^3 f6^2 / f1^6 f12')}"
     f" + 2*{F('f2^11 f12 / f1^6 f4^3 f6')}*{F('f3 / f1^3')}", "0",
     "the U_{24n+14} sum after substitution vanishes", {}),
    ("I.36n+25Trick1.1", f"{XI} - q^8/{XI}",
     f"-2*{F('f2^5 f3^3 f6^7 / f1^5 f4^5 f12^5')} + 4*q*{F('f6^7 f2^5 / f1^4 f4^6 f12^2')}"
     f" + 2*q*{F('f3^6 f12 f2^8 / f1^6 f4^7 f6^2')}",
     "U_{3n+1} of xi - q^8/xi", {"extract": (3, 1), "aliases": ("I.36n+25Trick1",)}),
    ("I.36n+25Trick1.2", f"{XI} - q^8/{XI}",
     f"-2*{F('f2^2 f6^16 / f1^3 f3^3 f4^4 f12^8')} + 2*q*{F('f3^6 f12 f2^8 / f1^6 f4^7 f6^2')}",
     "U_{3n+1} of xi - q^8/xi, reduced", {"extract": (3, 1)}),
    ("I.36n+25Trick1.3", f"{XI} - q^8/{XI}",
     f"-2*{F('f2^8 f6^16 / f1^6 f3^3 f4^7 f12^8')}*({F('f1^3 f4^3 / f2^6')} - q*{F('f3^9 f12^9 / f6^18')})",
     "U_{3n+1} of xi - q^8/xi, factored", {"extract": (3, 1)}),
    ("I.Xi.3n1", f"{XI} - q^8/{XI}", f"-2*{F('f2^4 f6^2 f3^2 / f1^2 f4^3 f12^3')}",
     "U_{3n+1} of xi - q^8/xi, closed form", {"extract": (3, 1)}),
    ("I.36n+25Trick2", f"{F('f1^3 f4^3 / f2^6')} - q*{F('f3^9 f12^9 / f6^18')}",
     "chi(-q)^3/chi(-q^2)^3*(1 - q*chi(q)^3/chi(q^3)^9)", "cubic chi relation", {}),
    ("I.36n+25Trick2.chi", "chi(-q)^3/chi(-q^2)^3 - q*chi(-q^3)^9/chi(-q^6)^9",
     f"{F('f1^3 f4^3 / f2^6')} - q*{F('f3^9 f12^9 / f6^18')}", "chi form of the same quotient", {}),
    ("I.36n+5Trick3.1", "1 - q*chi(q)^3/chi(q^3)^9", "chi(q)^3*psi(-q)^4/(chi(q^3)^9*psi(-q^3)^4)",
     "1 - q chi^3(q)/chi^9(q^3)", {"aliases": ("I.36n+5Trick3",)}),
    ("I.36n+5Trick3.2", "1 - q*chi(q)^3/chi(q^3)^9", F("f1 f2^2 f3^5 f4 f12^5 / f6^14"),
     "1 - q chi^3(q)/chi^9(q^3) as an eta quotient", {}),
    ("I.The36n+5Target", f"{XI} - q^8/{XI}",
     f"32*{F('f2^10 f3^7 / f1^15 f6^2')} + 96*q*{F('f2^2 f3^3 f6^6 / f1^11')}"
     f" + 16*{F('f2^9 f3^4 f6^5 / f1^14 f4^2 f12^2')} + 64*q*{F('f2^3 f3^6 f4^2 f12^2 / f1^12 f6')}"
     f" - 48*{F('f2^12 f6^20 / f1^19 f3^5 f12^8')} + 48*q*{F('f2^24 f6^8 / f1^23 f3 f4^8')}"
     f" + 768*q^2*{F('f4^8 f6^8 / f1^15 f3')} - 768*q^3*{F('f2^12 f3^3 f12^8 / f1^19 f6^4')}",
     "U_{36n+25} of xi - q^8/xi as a sum of eta quotients", {"extract": (36, 25)}),
    ("I.U36n+25.zero", f"{XI} - q^8/{XI}", "0", "U_{36n+25} of xi - q^8/xi vanishes",
     {"extract": (36, 25)}),
    ("I.36n+25Trick5.1", "psi(q)^4/psi(q^3)^4 + 3*q", "4*q + chi(-q^3)^9/chi(-q)^3",
     "psi^4(q)/psi^4(q^3) + 3q", {"aliases": ("I.36n+25Trick5",)}),
    ("I.36n+25Trick5.2", "psi(q)^4/psi(q^3)^4 + 3*q", f"aq(q)*{F('f2^2 f3^3 / f1 f6^6')}",
     "psi^4(q)/psi^4(q^3) + 3q through a(q)", {}),
    ("I.FirstTwo", f"32*{F('f2^10 f3^7 / f1^15 f6^2')} + 96*q*{F('f2^2 f3^3 f6^6 / f1^11')}",
     f"32*aq(q)*{F('f2^4 f3^6 / f1^12')}", "first two target terms through a(q)", {}),
    ("I.a-phi-psi", "aq(q)", "phi(q)*phi(q^3) + 4*q*psi(q^2)*psi(q^6)", "a(q) through phi, psi", {}),
    ("I.odd-phi-psi", "4*q*psi(q^2)*psi(q^6)", "phi(q)*phi(q^3) - phi(-q)*phi(-q^3)",
     "odd part of phi(q)phi(q^3)", {}),
    ("I.a1inPhiPsi", "aq(q)", f"{F('f2^5 f6^5 / f1^2 f4^2 f3^2 f12^2')} + 4*q*{F('f4^2 f12^2 / f2 f6')}",
     "a(q) as eta quotients", {}),
    ("I.OddpartPhi1Phi3", f"4*q*{F('f4^2 f12^2 / f2 f6')}",
     f"{F('f2^5 f6^5 / f1^2 f4^2 f3^2 f12^2')} - {F('f1^2 f3^2 / f2 f6')}",
     "odd part of phi(q)phi(q^3) as eta quotients", {}),
    ("I.SecondTwo", f"16*{F('f2^9 f3^4 f6^5 / f1^14 f4^2 f12^2')} + 64*q*{F('f2^3 f3^6 f4^2 f12^2 / f1^12 f6')}",
     f"16*aq(q)*{F('f2^4 f3^6 / f1^12')}", "third and fourth target terms through a(q)", {}),
    ("I.FifthSeventh", f"-48*{F('f2^12 f6^20 / f1^19 f3^5 f12^8')} + 768*q^2*{F('f4^8 f6^8 / f1^15 f3')}",
     f"-48*aq(q)*{F('f2 f3 f4^4 f6^9 / f1^13 f12^4')}", "fifth and seventh target terms through a(q)", {}),
    ("I.SixthLast", f"48*q*{F('f2^24 f6^8 / f1^23 f3 f4^8')} - 768*q^3*{F('f2^12 f3^3 f12^8 / f1^19 f6^4')}",
     f"48*q*aq(q)*{F('f2^13 f3^5 f12^4 / f1^17 f6^3 f4^4')}", "sixth and last target terms through a(q)", {}),
    ("I.36n+25ReducedTarget", f"48*aq(q)*{F('f2^4 f3^6 / f1^12')} - 48*aq(q)*{F('f2 f3 f4^4 f6^9 / f1^13 f12^4')}"
     f" + 48*q*aq(q)*{F('f2^13 f3^5 f12^4 / f1^17 f4^4 f6^3')}", "0",
     "the reduced U_{36n+25} expression vanishes",
     {"printed_lhs": f"48*aq(q)*{F('f2^4 f3^6 / f1^12')} - 48*aq(q)*{F('f2 f3 f4^4 f6^9 / f1^13 f12^4')}"
                     f" - 48*q*aq(q)*{F('f2^13 f3^5 f12^4 / f1^17 f4^4 f6^3')}",
      "erratum": "printed with a minus sign on the q term"}),
    ("I.36n+25ReducedTarget.2", f"48*aq(q)*{F('f2^3 f3^5 / f1^13 f6')}"
     "*(psi(q^2)^2*phi(q^3)^2 - q*phi(q)^2*psi(q^6)^2)",
     f"48*aq(q)*{F('f2 f3 f4^4 f6^9 / f1^13 f12^4')} - 48*q*aq(q)*{F('f2^13 f3^5 f12^4 / f1^17 f4^4 f6^3')}",
     "the psi, phi form of the reduced target",
     {"printed_rhs": f"48*aq(q)*{F('f2 f3 f4^4 f6^9 / f1^13 f12^4')}"
                     f" + 48*q*aq(q)*{F('f2^13 f3^5 f12^4 / f1^17 f4^4 f6^3')}",
      "erratum": "printed with a plus sign on the q term"}),
    ("I.LastTrick.1", "phi(q)^2 + phi(q^3)^2", "2*phi(-q^6)^2*chi(q)*psi(-q^3)/(chi(-q)*psi(q^3))",
     "phi^2(q) + phi^2(q^3)", {"aliases": ("I.LastTrick",)}),
    ("I.LastTrick.2", "psi(q^2)^2 - q*psi(q^6)^2", "phi(q^3)*psi(q^3)/(chi(q)*chi(-q^2))",
     "psi^2(q^2) - q psi^2(q^6)", {}),
    ("I.psi2phi3", "psi(q^2)^2*phi(q^3)^2 - q*phi(q)^2*psi(q^6)^2",
     f"2*{F('f4 f6^8 / f1 f3 f12^3')} - {F('f2^3 f3^5 / f1^3 f6')}",
     "psi^2(q^2)phi^2(q^3) - q phi^2(q)psi^2(q^6)", {}),
    ("I.phipsi.1", "phi(q)*psi(q^2)", "psi(q)^2", "phi(q)psi(q^2) = psi^2(q)", {}),
    ("I.phipsi.2", "phi(-q)*phi(q)", "phi(-q^2)^2", "phi(-q)phi(q) = phi^2(-q^2)", {}),
    ("I.phipsi.3", "chi(-q)*chi(q)", "chi(-q^2)", "chi(-q)chi(q) = chi(-q^2)", {}),
]
