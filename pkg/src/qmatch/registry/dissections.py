"""Theta-function identities on monomial specializations and p-dissections of f1, psi, phi.

A monomial is a pair ``(sign, exponent)`` standing for ``sign * q**exponent``.
"""

from __future__ import annotations

from itertools import product

from ..products import ThetaAtom, euler_f, is_prime, named, theta_f
from ..series import (
    TruncatedSeries,
    VerificationReport,
    add,
    equal_to_order,
    monomial,
    mul,
    scalar_mul,
    zero,
)

THETA_ORDER = 150
DISSECTION_ORDER = 300
GRID_MAX = 8

# (registry id, alias, description)
THETA_LEMMA = [
    ("L2.1.1", "2.1.29a", "f(a,b) = f(a^3 b, a b^3) + a f(b/a, a^5 b^3)"),
    ("L2.1.2", "2.1.29b", "f^2(-a,-b) = f(a^2,b^2) phi(ab) - 2a f(b/a, a^3 b) psi(a^2 b^2)"),
    ("L2.1.3", "2.1.30a", "f(a,b)f(c,d) + f(-a,-b)f(-c,-d) = 2 f(ac,bd) f(ad,bc), ab = cd"),
    ("L2.1.4", "2.1.30b", "f(a,b)f(c,d) - f(-a,-b)f(-c,-d) = 2a f(b/c, ac^2 d) f(b/d, acd^2), ab = cd"),
]

P_DISSECTIONS = [
    ("PD.f1", "f1", (5, 7, 11, 13), "p-dissection of f1 for primes p > 3"),
    ("PD.psi", "psi", (3, 5, 7), "p-dissection of psi(q) for odd primes p"),
    ("PD.phi", "phi", (3, 5, 7), "p-dissection of phi(q) for primes p"),
]


# -- monomial algebra -------------------------------------------------------------


def _mono(x):
    s, e = x
    if s not in (1, -1):
        raise ValueError(f"monomial sign must be +1 or -1, got {s}")
    return s, e


def _times(*xs):
    s, e = 1, 0
    for x in xs:
        s *= x[0]
        e += x[1]
    return s, e


def _over(x, y):
    return x[0] * y[0], x[1] - y[1]


def _pow(x, k):
    return x[0] ** k, x[1] * k


def _neg(x):
    return -x[0], x[1]


class _Product:
    """Product of theta atoms times a signed monomial, expanded with enough slack for Laurent factors."""

    def __init__(self, coeff, mono, atoms):
        self.coeff = coeff
        self.mono = mono
        self.atoms = [ThetaAtom(a[0], a[1], b[0], b[1]) for a, b in atoms]

    def expand(self, N) -> TruncatedSeries:
        lows = [min(e for e, _ in at.terms(max(N, 1))) for at in self.atoms]
        slack = -sum(min(0, v) for v in lows) + max(0, -self.mono[1])
        out = monomial(self.mono[1], N + slack, self.coeff * self.mono[0])
        for at in self.atoms:
            out = mul(out, theta_f(at, N + slack))
        return out.truncate(N)


def _expand_sum(terms, N):
    total = zero(N)
    for t in terms:
        total = add(total, t.expand(N))
    return total


def _phi(x):
    return (x, x)


def _psi(x):
    return (x, _pow(x, 3))


def theta_sides(alias: str, spec):
    """Both sides of one identity at a specialization, as lists of products."""
    one = (1, 0)
    if alias in ("2.1.29a", "2.1.29b"):
        a, b = map(_mono, spec)
        if alias == "2.1.29a":
            lhs = [_Product(1, one, [(a, b)])]
            rhs = [
                _Product(1, one, [(_times(_pow(a, 3), b), _times(a, _pow(b, 3)))]),
                _Product(1, a, [(_over(b, a), _times(_pow(a, 5), _pow(b, 3)))]),
            ]
        else:
            lhs = [_Product(1, one, [(_neg(a), _neg(b)), (_neg(a), _neg(b))])]
            ab = _times(a, b)
            rhs = [
                _Product(1, one, [(_pow(a, 2), _pow(b, 2)), _phi(ab)]),
                _Product(-2, a, [(_over(b, a), _times(_pow(a, 3), b)), _psi(_pow(ab, 2))]),
            ]
        return lhs, rhs
    if alias in ("2.1.30a", "2.1.30b"):
        a, b, c, d = map(_mono, spec)
        if _times(a, b) != _times(c, d):
            raise ValueError(f"specialization {spec} violates ab = cd")
        sign = 1 if alias == "2.1.30a" else -1
        lhs = [
            _Product(1, one, [(a, b), (c, d)]),
            _Product(sign, one, [(_neg(a), _neg(b)), (_neg(c), _neg(d))]),
        ]
        if alias == "2.1.30a":
            rhs = [_Product(2, one, [(_times(a, c), _times(b, d)), (_times(a, d), _times(b, c))])]
        else:
            rhs = [_Product(2, a, [
                (_over(b, c), _times(a, _pow(c, 2), d)),
                (_over(b, d), _times(a, c, _pow(d, 2))),
            ])]
        return lhs, rhs
    raise ValueError(f"unknown theta identity {alias!r}")


def default_grid(alias: str, top: int = GRID_MAX) -> list:
    """All signed ``a = +-q^r, b = +-q^s`` with ``1 <= r < s <= top``; for the product
    identities every signed ``c = +-q^t, d = +-q^u`` with ``t, u >= 1`` and ``ab = cd``."""
    signs = (1, -1)
    pairs = [((sa, r), (sb, s)) for r in range(1, top + 1) for s in range(r + 1, top + 1)
             for sa, sb in product(signs, signs)]
    if alias in ("2.1.29a", "2.1.29b"):
        return pairs
    if alias not in ("2.1.30a", "2.1.30b"):
        raise ValueError(f"unknown theta identity {alias!r}")
    out = []
    for a, b in pairs:
        sab, e = _times(a, b)
        for t in range(1, e):
            for sc in signs:
                out.append((a, b, (sc, t), (sab * sc, e - t)))
    return out


def theta_order(spec, checks):
    return checks


def check_theta(alias: str, spec, N: int) -> VerificationReport:
    for s, e in spec:
        if e < 1:
            raise ValueError(f"specialization exponents must be >= 1, got {spec}")
    lhs, rhs = theta_sides(alias, spec)
    return equal_to_order(_expand_sum(lhs, N), _expand_sum(rhs, N))


def theta_runner(alias: str):
    def run(spec, N, min_checks):
        rep = check_theta(alias, spec, N)
        return [{"label": f"{alias} at {spec}", "passed": rep.passed, "checked_count": rep.checked_count,
                 "first_failure_n": rep.first_failure_n, "order_used": rep.order_used}]

    return run


def verify_theta_lemma(alias: str, grid=None, N: int = THETA_ORDER) -> VerificationReport:
    """Check one of the four theta identities over a grid of monomial specializations.

    ``alias`` is one of ``2.1.29a``, ``2.1.29b``, ``2.1.30a``, ``2.1.30b``; the default
    grid is :func:`default_grid`.  The report counts compared coefficients over all
    grid points and gives the first failing exponent of the first failing point.
    """
    if grid is None:
        grid = default_grid(alias)
    checked = 0
    for spec in grid:
        rep = check_theta(alias, spec, N)
        checked += rep.checked_count
        if not rep.passed:
            return VerificationReport(False, checked, rep.first_failure_n, N)
    return VerificationReport(True, checked, None, N)


# -- p-dissections ------------------------------------------------------------------


def _theta(s1, r1, s2, r2, N):
    return theta_f(ThetaAtom(s1, r1, s2, r2), N)


def _shifted(series, k, c, N):
    return scalar_mul(c, mul(monomial(k, N), series)).truncate(N)


def f1_side_condition(p: int) -> bool:
    """(3k^2+k)/2 is never (p^2-1)/24 mod p off the distinguished k."""
    k0 = special_k(p)
    target = (p * p - 1) // 24
    return all(((3 * k * k + k) // 2 - target) % p
               for k in range(-(p - 1) // 2, (p - 1) // 2 + 1) if k != k0)


def special_k(p: int) -> int:
    """(+-p - 1)/6: (p-1)/6 when p = 1 mod 6, (-p-1)/6 when p = -1 mod 6."""
    if p % 6 == 1:
        return (p - 1) // 6
    if p % 6 == 5:
        return (-p - 1) // 6
    raise ValueError(f"p={p} is not prime to 6")


def psi_side_condition(p: int) -> bool:
    target = (p * p - 1) // 8
    return all(((k * k + k) // 2 - target) % p for k in range(0, (p - 3) // 2 + 1))


def phi_side_condition(p: int) -> bool:
    # the k-th piece sits on exponents k^2 mod p, away from the q^(p^2 n) piece
    return all((k * k) % p for k in range(1, p))


def f1_dissection(p: int, N: int) -> TruncatedSeries:
    if not is_prime(p) or p <= 3:
        raise ValueError(f"the f1 dissection needs a prime p > 3, got {p}")
    k0 = special_k(p)
    total = _shifted(euler_f(p * p, N), (p * p - 1) // 24, (-1) ** abs(k0), N)
    for k in range(-(p - 1) // 2, (p - 1) // 2 + 1):
        if k == k0:
            continue
        e1 = (3 * p * p + (6 * k + 1) * p) // 2
        e2 = (3 * p * p - (6 * k + 1) * p) // 2
        total = add(total, _shifted(_theta(-1, e1, -1, e2, N), (3 * k * k + k) // 2, (-1) ** abs(k), N))
    return total


def psi_dissection(p: int, N: int) -> TruncatedSeries:
    if not is_prime(p) or p == 2:
        raise ValueError(f"the psi dissection needs an odd prime, got {p}")
    total = _shifted(named("psi", (1, p * p), N), (p * p - 1) // 8, 1, N)
    for k in range(0, (p - 3) // 2 + 1):
        e1 = (p * p + (2 * k + 1) * p) // 2
        e2 = (p * p - (2 * k + 1) * p) // 2
        total = add(total, _shifted(_theta(1, e1, 1, e2, N), (k * k + k) // 2, 1, N))
    return total


def phi_dissection(p: int, N: int) -> TruncatedSeries:
    if not is_prime(p):
        raise ValueError(f"the phi dissection needs a prime, got {p}")
    total = named("phi", (1, p * p), N)
    for k in range(1, p):
        piece = _Product(1, (1, k * k), [((1, p * (p - 2 * k)), (1, p * (p + 2 * k)))])
        total = add(total, piece.expand(N))
    return total


_DISSECT = {
    "f1": (f1_dissection, f1_side_condition, lambda N: euler_f(1, N)),
    "psi": (psi_dissection, psi_side_condition, lambda N: named("psi", (1, 1), N)),
    "phi": (phi_dissection, phi_side_condition, lambda N: named("phi", (1, 1), N)),
}


def verify_p_dissection(which: str, p: int, N: int = DISSECTION_ORDER) -> VerificationReport:
    """Rebuild the p-dissection of ``which`` (f1, psi or phi) and compare with the direct series.

    The congruence side condition that keeps the distinguished piece alone on
    its residue class is asserted first.
    """
    try:
        build, side, direct = _DISSECT[which]
    except KeyError:
        raise ValueError(f"unknown dissection {which!r}; expected f1, psi or phi") from None
    rhs = build(p, N)
    if not side(p):
        raise ArithmeticError(f"side condition fails for {which} at p={p}")
    return equal_to_order(direct(N), rhs)


def dissection_order(p, checks):
    return checks


def dissection_runner(which: str):
    def run(p, N, min_checks):
        rep = verify_p_dissection(which, p, N)
        return [{"label": f"{which}, p={p}", "passed": rep.passed, "checked_count": rep.checked_count,
                 "first_failure_n": rep.first_failure_n, "order_used": rep.order_used}]

    return run
