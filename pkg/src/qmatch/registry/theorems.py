"""Matching-coefficient statements: intro examples, the six theorem families, conjectures.

Each item is ``(id, A-expression, [relations], statement)``; a relation tuple
is ``(cA, aA, rA, cB, aB, rB)`` against the reciprocal of A unless the entry
names a different B.

``ERRATA`` maps an id to the corrected relations that are actually checked,
plus a note; the list in the item itself is the literal printed statement.
"""

import re
from dataclasses import dataclass

from ..dsl import evaluate, parse
from ..matching import MatchRelation, verify_relation
from ..products import is_prime
from ..series import invert

# -- expression builders ------------------------------------------------


def delta(m, k):
    return f"f(1)^{k}/f({m})^{k}"


def delta2(l, m, k):
    return f"f(1)^{k}*f({l})^{k}/(f({m})^{k}*f({l * m})^{k})"


def mu(m, k):
    return f"ph({k},{2 * k})^{m * k}/ph(1,2)^{m}"


def nu(m, k):
    return f"ph(1,2)^{m * k}/ph({k},{2 * k})^{m}"


def eta_q(k):
    return f"ph(1,2)^3*ph(9,18)^3/ph(3,6)^{2 * k}"


def zeta(m, k):
    return f"ph(1,2)^{k}*ph({m},{2 * m})^{k}"


THETA1 = "ph(1,2)*ph(3,6)*ph(5,10)*ph(15,30)"
THETA2 = "ph(1,2)/ph(25,50)"

LAMBDA = {
    1: "R(q)^-5",
    2: "R(q)^5/R(q^5)",
    3: "R(q^2)/R(q)^2",
    4: "1/(R(q)*R(q^2)^2)",
    5: "1/(R(q)*R(q^4))",
    6: "1/(R(-q)*R(-q^4))",
    7: "R(q^4)/R(q)^4",
    8: "R(q)^2/R(q^4)^3",
    9: "R(q)/R(q^16)",
    10: "R(q^4)/(R(q)^2*R(q^2))",
    11: "1/(R(q)*R(q^14))",
    12: "1/(R(q)*R(q^2)*R(q^4)*R(q^8))",
    13: "R(q)*R(q^2)/(R(q^6)*R(q^12))",
    14: "R(-q)*R(q^2)/(R(-q^6)*R(q^12))",
}


def rho1(k):
    return f"S(q)^{k}/T(q)^{k}"


def rho2(k):
    return f"T(q)*S(q^{k})/(S(q)*T(q^{k}))"


def rho3(k):
    return f"S(q)*S(q^{k})/(T(q)*T(q^{k}))"


RHO4 = "T(q^2)*S(q^4)/(S(q^2)*T(q^4))"


def rho5(k):
    return f"(S(-q)*T(q)*S(q^4)/(S(q)*T(-q)*T(q^4)))^{k}"


RHO6 = "S(-q)*T(q^2)*S(q^3)/(T(-q)*S(q^2)*T(q^3))"
RHO7 = "T(-q)*T(q^2)*S(q^3)/(S(-q)*S(q^2)*T(q^3))"
RHO8 = "S(q)*S(-q^3)*S(q^6)/(T(q)*T(-q^3)*T(q^6))"
RHO9 = "S(q)*T(-q^3)*S(q^6)/(T(q)*S(-q^3)*T(q^6))"


def xi1(k):
    return f"Y(q)^{k}/X(q)^{k}"


def xi(m, k):
    return f"X(q)^{k}*Y(q^{m})^{k}/(Y(q)^{k}*X(q^{m})^{k})"


XI4 = "Y(q)*Y(q^2)/(X(q)*X(q^2))"


_F = re.compile(r"f\((\d+)\)")


def negate_q(expr: str) -> str:
    """Rewrite an eta quotient in ``f(k)`` atoms at ``-q`` (f_k(-q) = f_2k^3/(f_k f_4k) for odd k)."""

    def sub(m):
        k = int(m.group(1))
        if k % 2 == 0:
            return m.group(0)
        return f"(f({2 * k})^3/(f({k})*f({4 * k})))"

    return _F.sub(sub, expr)


# -- p-dissection family (parametric in the prime) --------------------------------


def gamma(which: int, p: int) -> str:
    g1 = f"f(1)/f({p})"
    if which == 1:
        return g1
    if which == 2:
        return f"f(1)^2*f({2 * p})/(f({p})^2*f(2))"
    return f"f(2)^2*f({p})/(f({2 * p})^2*f(1))"


def gamma1_sign(p: int) -> int:
    """(-1)^((p +- 1)/6), the sign chosen so that (p +- 1)/6 is an integer."""
    lo, hi = (p - 1) % 6 == 0, (p + 1) % 6 == 0
    if lo == hi:
        raise ArithmeticError(f"p={p}: expected exactly one of (p-1)/6, (p+1)/6 to be integral")
    k = (p - 1) // 6 if lo else (p + 1) // 6
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class PrimeFamily:
    id: str
    which: int
    primes: tuple
    min_prime: int
    statement: str

    def relation(self, p: int) -> MatchRelation:
        if not is_prime(p) or p < self.min_prime:
            raise ValueError(f"{self.id} needs a prime p >= {self.min_prime}, got {p}")
        if self.which == 1:
            return MatchRelation(1, p, (p * p - 1) // 24, gamma1_sign(p), 1, 0)
        if self.which == 2:
            return MatchRelation(1, p, 0, 1, 1, 0)
        return MatchRelation(1, p, (p * p - 1) // 8, 1, 1, 0)

    def min_order(self, p, checks):
        return self.relation(p).min_order(checks)

    def run(self, p, N, min_checks):
        rel = self.relation(p)
        A = evaluate(parse(gamma(self.which, p)), N)
        rep = verify_relation(A, invert(A), rel, min_checks)
        return [{"label": f"p={p}: {rel}", "passed": rep.passed, "checked_count": rep.checked_count,
                 "first_failure_n": rep.first_failure_n, "order_used": rep.order_used}]


T11 = [
    PrimeFamily("T1.1.i", 1, (5, 7, 11, 13), 5,
                "gamma_1 = (q,...,q^(p-1);q^p): gamma_1(pn + (p^2-1)/24) = (-1)^((p+-1)/6) gamma_1'(n), p > 3"),
    PrimeFamily("T1.1.ii", 2, (3, 5, 7, 11, 13), 3,
                "gamma_2 = gamma_1(q)^2/gamma_1(q^2): gamma_2(pn) = gamma_2'(n)"),
    PrimeFamily("T1.1.iii", 3, (3, 5, 7, 11, 13), 3,
                "gamma_3 = gamma_1(q^2)^2/gamma_1(q): gamma_3(pn + (p^2-1)/8) = gamma_3'(n)"),
]

# -- intro ----------------------------------------------------------------

INTRO = [
    ("I.alpha", "ph(1,2)^8", [(1, 2, 1, -8, 1, 0)],
     "alpha = (q;q^2)^8: alpha(2n+1) = -8 alpha'(n)"),
    ("I.beta", "ph(1,2)^24", [(1, 2, 3, -2048, 1, 0)],
     "beta = (q;q^2)^24: beta(2n+3) = -2048 beta'(n)"),
]

# -- delta family -----------------------------------------------------------

_T12 = [
    ("i", delta(3, 3), 3, 1, -3),
    ("ii", delta(3, 6), 3, 2, 9),
    ("iii", delta(5, 2), 5, 2, -1),
    ("iv", delta(5, 3), 5, 3, 5),
    ("v", delta(5, 4), 5, 4, -5),
    ("vi", delta(5, 8), 5, 3, -125),
    ("vii", delta(7, 2), 7, 4, 1),
    ("viii", delta(7, 3), 7, 6, -7),
    ("ix", delta(7, 6), 7, 12, 49),
    ("x", delta(11, 2), 11, 10, 1),
    ("xi", delta2(2, 3, 1), 3, 1, -1),
    ("xii", delta2(2, 3, 2), 3, 2, -3),
    ("xiii", delta2(2, 3, 5), 3, 5, -81),
    ("xiv", delta2(2, 5, 1), 5, 3, 1),
    ("xv", delta2(2, 5, 3), 5, 9, 25),
    ("xvi", delta2(3, 5, 1), 5, 4, 1),
    ("xvii", delta2(3, 5, 2), 5, 8, -5),
    ("xviii", delta2(3, 5, 3), 5, 12, 25),
    ("xix", delta2(2, 7, 1), 7, 6, 1),
    ("xx", delta2(4, 7, 1), 7, 10, 1),
    ("xxi", delta2(3, 11, 1), 11, 20, 1),
    ("xxii", delta2(4, 11, 1), 11, 25, 1),
]

T12 = [
    (f"T1.2.{i}", e, [(1, a, r, c, 1, 0)], f"{e}: A({a}n+{r}) = {c} A'(n)")
    for i, e, a, r, c in _T12
]

# -- mu / nu / eta / zeta / theta family ----------------------------------------

_T13 = [
    ("i", mu(1, 3), (1, 2, 1, 1, 1, 0)),
    ("ii", mu(3, 3), (1, 2, 3, 4, 1, 0)),
    ("iii", mu(1, 5), (1, 2, 3, 2, 1, 0)),
    ("iv", nu(1, 3), (1, 2, 0, 1, 1, 0)),
    ("v", nu(1, 5), (1, 2, 2, 2, 1, 1)),
    ("vi", nu(3, 3), (1, 2, 0, 4, 1, 0)),
    ("vii", eta_q(1), (1, 2, 3, -2, 1, 0)),
    ("viii", eta_q(5), (2, 1, 0, -1, 2, 0)),
    ("ix", zeta(3, 2), (1, 2, 1, -2, 1, 0)),
    ("x", zeta(5, 4), (1, 2, 3, -8, 1, 0)),
    ("xi", zeta(7, 1), (1, 2, 1, -1, 1, 0)),
    ("xii", zeta(7, 3), (1, 2, 3, -4, 1, 0)),
    ("xiii", zeta(11, 2), (1, 2, 3, -2, 1, 0)),
    ("xiv", zeta(23, 1), (1, 2, 3, -1, 1, 0)),
    ("xv", THETA1, (1, 2, 3, -2, 1, 0)),
    ("xvi", THETA2, (2, 10, 3, -1, 5, 3)),
    ("xvii", THETA2, (2, 10, 5, -1, 5, 4)),
]


def _describe(expr, rels):
    parts = []
    for cA, aA, rA, cB, aB, rB in rels:
        left = "" if cA == 1 else f"{cA} "
        parts.append(f"{left}A({aA}n+{rA}) = {cB} A'({aB}n+{rB})")
    return f"{expr}: " + "; ".join(parts)


T13 = [(f"T1.3.{i}", e, [r], _describe(e, [r])) for i, e, r in _T13]

# -- Rogers-Ramanujan continued fraction family --------------------------------


def _pair(a, rs, shift, c):
    return [(1, a, r, c, a, r - shift) for r in rs]


_T14 = [
    ("i", LAMBDA[1], _pair(5, (3, 4), 2, -1)),
    ("ii", LAMBDA[2], _pair(5, (0,), 0, 1)),
    ("iii", LAMBDA[3], _pair(5, (1, 4), 0, -1)),
    ("iv", LAMBDA[4], _pair(5, (3, 4), 2, -1)),
    ("v", LAMBDA[5], _pair(5, (3, 4), 2, 1)),
    ("vi", LAMBDA[6], _pair(10, (5, 7), 2, 1)),
    ("vii", LAMBDA[7], _pair(10, (1, 9), 0, -1)),
    ("viii", LAMBDA[8], _pair(10, (5, 9), 4, -1)),
    ("ix", LAMBDA[9], _pair(10, (7, 9), 6, 1)),
    ("x", LAMBDA[10], [(1, 2, 0, 1, 2, 0), (1, 2, 1, -1, 2, 1)]),
    ("xi", LAMBDA[10], _pair(5, (2, 3), 0, 1)),
]

T14 = [(f"T1.4.{i}", e, rels, _describe(e, rels)) for i, e, rels in _T14]

# -- Ramanujan-Goellnitz-Gordon family --------------------------------------------

_T15 = [
    ("i", rho1(1), (1, 2, 1, 1, 2, 0)),
    ("ii", rho1(1), (1, 4, 2, -1, 4, 1)),
    ("iii", rho1(2), (1, 2, 3, -1, 2, 1)),
    ("iv", rho1(2), (1, 8, 4, 1, 8, 2)),
    ("v", rho1(2), (1, 8, 6, 1, 8, 4)),
    ("vi", rho1(4), (1, 4, 6, 1, 4, 2)),
    ("vii", rho2(3), (1, 4, 5, -1, 4, 3)),
    ("viii", rho2(5), (1, 4, 6, -1, 4, 2)),
    ("ix", rho2(7), (1, 4, 7, -1, 4, 1)),
    ("x", rho2(9), (1, 4, 10, -1, 4, 2)),
    ("xi", rho3(3), (1, 4, 6, -1, 4, 2)),
    ("xii", rho3(5), (1, 4, 7, -1, 4, 1)),
    ("xiii", rho3(9), (1, 4, 11, -1, 4, 1)),
    ("xiv", RHO4, (1, 4, 2, -1, 4, 0)),
    ("xv", rho5(1), (1, 4, 6, -1, 4, 2)),
    ("xvi", rho5(1), (1, 4, 7, 1, 4, 3)),
    ("xvii", rho5(1), (1, 8, 4, -1, 8, 0)),
    ("xviii", rho5(1), (1, 8, 5, 1, 8, 1)),
    ("xix", rho5(2), (1, 8, 12, -1, 8, 4)),
    ("xx", RHO6, (1, 4, 5, -1, 4, 3)),
    ("xxi", RHO7, (1, 8, 0, -1, 8, 0)),
    ("xxii", RHO8, (1, 8, 13, -1, 8, 3)),
    ("xxiii", RHO9, (1, 4, 6, -1, 4, 2)),
]

T15 = [(f"T1.5.{i}", e, [r], _describe(e, [r])) for i, e, r in _T15]

# -- Slater X, Y family ---------------------------------------------------------

_T16 = [
    ("i", xi1(1), (1, 2, 3, -1, 2, 1)),
    ("ii", xi1(1), (1, 4, 2, 1, 4, 0)),
    ("iii", xi1(1), (1, 6, 2, 1, 6, 0)),
    ("iv", xi1(2), (1, 12, 7, 1, 12, 3)),
    ("v", xi1(2), (1, 24, 12, 1, 24, 8)),
    ("vi", xi(2, 1), (1, 2, 3, -1, 2, 1)),
    ("vii", xi(2, 1), (1, 4, 2, 1, 4, 0)),
    ("viii", xi(2, 1), (1, 12, 8, 1, 12, 6)),
    ("ix", xi(2, 2), (1, 12, 7, 1, 12, 3)),
    ("x", xi(2, 2), (1, 24, 12, 1, 24, 8)),
    ("xi", xi(3, 1), (1, 3, 5, 1, 3, 1)),
    ("xii", xi(3, 1), (1, 6, 8, -1, 6, 4)),
    ("xiii", xi(3, 1), (1, 6, 4, -1, 6, 0)),
    ("xiv", xi(3, 1), (1, 12, 7, 1, 12, 3)),
    ("xv", xi(3, 2), (1, 24, 14, 1, 24, 6)),
    ("xvi", xi(3, 2), (1, 36, 25, 1, 36, 17)),
    ("xvii", XI4, (1, 12, 15, -1, 12, 9)),
    ("xviii", XI4, (1, 12, 7, -1, 12, 1)),
    ("xix", XI4, (1, 12, 10, 1, 12, 4)),
    ("xx", XI4, (1, 12, 11, -1, 12, 5)),
    ("xxi", XI4, (1, 24, 13, 1, 24, 7)),
    ("xxii", XI4, (1, 36, 24, 1, 36, 18)),
]

T16 = [(f"T1.6.{i}", e, [r], _describe(e, [r])) for i, e, r in _T16]

# -- conjectures ------------------------------------------------------------------

OMEGA21 = "omega(21; 2,8,10,11,13,19 / 1,4,5,16,17,20)"
OMEGA28 = "omega(28; 5,11,13,15,17,23 / 1,3,9,19,25,27)"
OMEGA77 = (
    "omega(77; 2,3,5,8,12,18,20,26,27,29,30,31,32,34,38,39,43,45,46,47,48,50,51,57,"
    "59,65,69,72,74,75 / 1,4,6,9,10,13,15,16,17,19,23,24,25,36,37,40,41,52,53,54,58,"
    "60,61,62,64,67,68,71,73,76)"
)

_C8 = [
    ("C8.1.lambda11", LAMBDA[11], _pair(10, (7, 9, 12, 14), 6, 1)),
    ("C8.1.lambda12", LAMBDA[12], _pair(10, (7, 9), 6, 1) + [(1, 20, 11, 1, 20, 5)]),
    ("C8.1.lambda13", LAMBDA[13], _pair(30, (10, 16, 20, 26), 6, 1)),
    ("C8.1.lambda14", LAMBDA[14], _pair(30, (7, 17, 19, 29), 6, 1)),
    ("C8.2.omega13", "omega(13)", _pair(13, (3, 6, 7, 8, 9, 12), 2, -1)),
    ("C8.2.omega17", "omega(17)", _pair(17, (5, 7, 8, 9, 12, 13, 14, 16), 4, -1)),
    ("C8.2.omega29", "omega(29)",
     _pair(29, (7, 8, 9, 10, 12, 16, 19, 23, 25, 26, 27, 28, 31, 33), 6, -1)),
    ("C8.2.omega53", "omega(53)",
     _pair(53, (15, 19, 21, 25, 26, 27, 28, 29, 30, 33, 34, 37, 38, 39, 40, 41, 42, 46,
                48, 52, 55, 57, 58, 62, 63, 65), 14, -1)),
    ("C8.3.omega21", OMEGA21, _pair(21, (4, 6, 10, 11, 13, 17, 18, 20, 24), 4, 1)),
    ("C8.3.omega28", OMEGA28, _pair(56, (14, 21, 38), 8, 1)),
    ("C8.3.omega77", OMEGA77,
     _pair(77, (27, 28, 35, 37, 48, 49, 65, 70, 72, 76, 79, 83, 90, 93, 98), 24, 1)),
]

CONJECTURES = [(i, e, rels, _describe(e, rels)) for i, e, rels in _C8]

# -- misprints: id -> corrected relations, note, optional literal B ----------------

ERRATA = {
    "T1.2.vi": {
        "relations": [(1, 5, 8, -125, 1, 0)],
        "note": "printed residue 3 fails at n=0; the progression that matches is 5n+8",
    },
    "T1.3.vi": {
        "relations": [(1, 2, 2, 4, 1, 1)],
        "note": "the printed relation fails at n=0 (1 != 4); it holds for every n >= 1",
    },
    "T1.3.viii": {
        "relations": [(2, 1, 1, -1, 2, 2)],
        "note": "the printed relation fails at n=0 (2 != -1); it holds for every n >= 1",
    },
    "T1.5.vi": {
        "relations": [(1, 4, 6, -1, 4, 2)],
        "stated_b": rho1(2),
        "note": "printed against the reciprocal of rho_{1,2} with a plus sign; "
                "the relation holds against rho_{1,4} itself with a minus sign",
    },
    "T1.5.xxi": {
        "relations": [(1, 8, 8, -1, 8, 8)],
        "note": "the printed relation fails at n=0 (1 != -1); it holds for every n >= 1",
    },
    "C8.3.omega28": {
        "relations": _pair(56, (14, 30, 38), 8, 1),
        "note": "printed residue 21 has a counterexample at n=1; scanning finds residue 30 instead",
    },
}
