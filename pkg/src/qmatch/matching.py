"""Matching-coefficient relations ``cA*A(aA*n + rA) = cB*B(aB*n + rB)`` (n >= 0)."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd

from .dsl import BinOp, Const, evaluate, parse
from .errors import InsufficientOrder
from .series import TruncatedSeries, VerificationReport, coefficient

DEFAULT_MIN_CHECKS = 50
# scan needs this many nonzero terms on a progression before trusting a ratio
MIN_WITNESSES = 5

_FIELDS = ("cA", "aA", "rA", "cB", "aB", "rB")


@dataclass(frozen=True, order=True)
class MatchRelation:
    cA: int
    aA: int
    rA: int
    cB: int
    aB: int
    rB: int

    def __post_init__(self):
        if self.cA < 1:
            raise ValueError(f"cA must be positive, got {self.cA}")
        if self.cB == 0:
            raise ValueError("cB must be nonzero")
        if self.aA < 1 or self.aB < 1:
            raise ValueError("moduli must be positive")
        if self.rA < 0 or self.rB < 0:
            raise ValueError("residues must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "MatchRelation":
        missing = [k for k in _FIELDS if k not in d]
        if missing:
            raise ValueError(f"relation is missing {missing}")
        return cls(*(int(d[k]) for k in _FIELDS))

    @classmethod
    def from_json(cls, text: str) -> "MatchRelation":
        return cls.from_dict(json.loads(text))

    def swapped(self) -> "MatchRelation":
        """The same statement read from the other side (``cA`` kept positive)."""
        s = 1 if self.cB > 0 else -1
        return MatchRelation(abs(self.cB), self.aB, self.rB, s * self.cA, self.aA, self.rA)

    def checks_available(self, order_A: int, order_B: int) -> int:
        """How many n >= 0 have both indices inside the windows."""
        na = max(0, -((self.rA - order_A) // self.aA))
        nb = max(0, -((self.rB - order_B) // self.aB))
        return min(na, nb)

    def min_order(self, checks: int = DEFAULT_MIN_CHECKS) -> int:
        """Smallest common order giving ``checks`` comparisons."""
        return max(self.aA * (checks - 1) + self.rA, self.aB * (checks - 1) + self.rB) + 1

    def implies(self, other: "MatchRelation") -> bool:
        """True when ``other`` restricts this relation to a sub-progression."""
        if (self.cA, self.cB) != (other.cA, other.cB):
            return False
        if other.aA % self.aA or other.aB % self.aB:
            return False
        t = other.aA // self.aA
        if other.aB != t * self.aB:
            return False
        dA = other.rA - self.rA
        dB = other.rB - self.rB
        if dA < 0 or dA % self.aA or dB < 0 or dB % self.aB:
            return False
        return dA // self.aA == dB // self.aB

    def __str__(self):
        def side(c, a, r, name):
            lead = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            return f"{lead}{name}({a}n+{r})"

        return f"{side(self.cA, self.aA, self.rA, 'A')} = {side(self.cB, self.aB, self.rB, 'B')}"


def reciprocal_pair(expr, N: int):
    """``(A, 1/A)`` both known to order ``N``."""
    if isinstance(expr, str):
        expr = parse(expr)
    return evaluate(expr, N), evaluate(BinOp("/", Const(1), expr), N)


def verify_relation(
    A: TruncatedSeries,
    B: TruncatedSeries,
    rel: MatchRelation,
    min_checks: int = DEFAULT_MIN_CHECKS,
) -> VerificationReport:
    if min_checks < 1:
        raise ValueError("min_checks must be >= 1")
    count = rel.checks_available(A.order, B.order)
    order_used = min(A.order, B.order)
    if count < min_checks:
        raise InsufficientOrder(
            f"{rel}: only {count} comparisons fit below orders {A.order}/{B.order}, "
            f"need {min_checks} (order >= {rel.min_order(min_checks)})",
            checked=count,
            required=min_checks,
        )
    for n in range(count):
        lhs = rel.cA * coefficient(A, rel.aA * n + rel.rA)
        rhs = rel.cB * coefficient(B, rel.aB * n + rel.rB)
        if lhs != rhs:
            return VerificationReport(False, n + 1, n, order_used)
    return VerificationReport(True, count, None, order_used)


# -- scanning ---------------------------------------------------------------


def _progression(S: TruncatedSeries, a: int, r: int) -> list:
    v, c = S.valuation, S.coeffs
    out = []
    for idx in range(r, S.order, a):
        i = idx - v
        out.append(c[i] if i >= 0 else 0)
    return out


def _candidates_B(aA: int):
    seen = set()
    for r in range(3 * aA):
        seen.add((aA, r))
    for r in range(aA):
        seen.add((1, r))
    if aA % 2 == 0:
        for r in range(3 * aA):
            seen.add((aA // 2, r))
    return sorted(seen)


def _infer(sa, sb, count):
    """Return ("rel", cA, cB), ("vanish",) or None for one candidate pair."""
    for n in range(count):
        x, y = sa[n], sb[n]
        if x and y:
            break
        if x or y:
            return None
    else:
        return ("vanish",)
    g = gcd(x, y)
    cA, cB = abs(y) // g, (1 if (x > 0) == (y > 0) else -1) * (abs(x) // g)
    if cA != 1 and abs(cB) != 1:
        return None
    for m in range(count):
        if cA * sa[m] != cB * sb[m]:
            return None
    if sum(1 for m in range(count) if sa[m]) < MIN_WITNESSES:
        return None
    return ("rel", cA, cB)


def _scan_modulus(A, B, aA, min_checks):
    found, vanishing = [], []
    progB = {}
    for rA in range(3 * aA):
        sa = _progression(A, aA, rA)
        for aB, rB in _candidates_B(aA):
            if (aB, rB) not in progB:
                progB[(aB, rB)] = _progression(B, aB, rB)
            sb = progB[(aB, rB)]
            count = min(len(sa), len(sb))
            if count < min_checks:
                continue
            res = _infer(sa, sb, count)
            if res is None:
                continue
            if res[0] == "vanish":
                vanishing.append((aA, rA, aB, rB))
            else:
                found.append(MatchRelation(res[1], aA, rA, res[2], aB, rB))
    return found, vanishing


def _scan_all(A, B, max_modulus, min_checks, jobs):
    if max_modulus < 1:
        raise ValueError("max_modulus must be >= 1")
    moduli = range(1, max_modulus + 1)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_modulus, *zip(*[(A, B, a, min_checks) for a in moduli])))
    else:
        parts = [_scan_modulus(A, B, a, min_checks) for a in moduli]
    found = sorted({r for f, _ in parts for r in f}, key=_canonical)
    vanishing = sorted({v for _, vs in parts for v in vs})
    return found, vanishing


def _canonical(rel: MatchRelation):
    return (rel.aA, rel.rA, rel.aB, rel.rB, rel.cA, rel.cB)


def prune(relations) -> list:
    """Drop every relation implied by another one in the list."""
    rels = sorted(set(relations), key=_canonical)
    return [r for r in rels if not any(o != r and o.implies(r) for o in rels)]


def scan(
    A: TruncatedSeries,
    B: TruncatedSeries,
    max_modulus: int,
    min_checks: int = DEFAULT_MIN_CHECKS,
    jobs: int = 1,
) -> list:
    """Search the restricted candidate space for relations between ``A`` and ``B``.

    Candidates: ``aA <= max_modulus``, ``rA < 3*aA`` and ``(aB, rB)`` either
    ``(aA, r < 3*aA)``, ``(1, r < aA)`` or ``(aA/2, r < 3*aA)``.  The ratio is
    read off the first index where both sides are nonzero and must be integral
    one way round.  Relations implied by a coarser one are pruned.
    """
    found, _ = _scan_all(A, B, max_modulus, min_checks, jobs)
    return prune(found)


def vanishing_progressions(
    A: TruncatedSeries,
    B: TruncatedSeries,
    max_modulus: int,
    min_checks: int = DEFAULT_MIN_CHECKS,
) -> list:
    """``(aA, rA, aB, rB)`` tuples where both sides vanish on every checked index."""
    _, vanishing = _scan_all(A, B, max_modulus, min_checks, 1)
    return vanishing
