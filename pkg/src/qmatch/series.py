"""Exact truncated Laurent series in q with integer coefficients.

A :class:`TruncatedSeries` knows the coefficients of ``q**valuation`` up to
(but excluding) ``q**order``.  Coefficients at or beyond ``order`` are
*unknown*; every operation propagates the order it can actually justify, so a
result never claims more than its inputs support.

The zero series is stored with empty ``coeffs`` and ``valuation == order``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import ConstructionError, NonUnitLeading, OrderExceeded

# a factor is treated as sparse when nnz * SPARSE_RATIO <= length
SPARSE_RATIO = 3


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a finite-order check."""

    passed: bool
    checked_count: int
    first_failure_n: Optional[int]
    order_used: int

    def __post_init__(self):
        if self.passed != (self.first_failure_n is None):
            raise ValueError("passed must hold exactly when there is no failure index")
        if self.checked_count < 0:
            raise ValueError("checked_count must be non-negative")

    def to_dict(self):
        return {
            "passed": self.passed,
            "checked_count": self.checked_count,
            "first_failure_n": self.first_failure_n,
            "order_used": self.order_used,
        }


@dataclass(frozen=True)
class ExtractionSpec:
    """Selects the progression ``a*n + b`` (the operator U_{an+b})."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"modulus must be >= 1, got {self.a}")
        if self.b < 0:
            raise ValueError(f"residue must be >= 0, got {self.b}")


class TruncatedSeries:
    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, valuation: int, coeffs: Iterable[int], order: int):
        coeffs = list(coeffs)
        if order - valuation != len(coeffs):
            raise ConstructionError(
                f"window [{valuation}, {order}) holds {order - valuation} "
                f"coefficients, got {len(coeffs)}"
            )
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        if start == len(coeffs):
            valuation, coeffs = order, ()
        else:
            valuation += start
            coeffs = tuple(int(c) for c in coeffs[start:])
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __reduce__(self):
        # slots plus a blocked __setattr__ defeat the default pickle path
        return TruncatedSeries, (self.valuation, self.coeffs, self.order)

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def terms(self) -> list:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent."""
        v = self.valuation
        return [(v + i, c) for i, c in enumerate(self.coeffs) if c]

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.valuation, self.coeffs, self.order) == (
            other.valuation,
            other.coeffs,
            other.order,
        )

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.order))

    def __repr__(self):
        if self.is_zero:
            return f"TruncatedSeries(0 + O(q^{self.order}))"
        shown = []
        for e, c in self.terms()[:8]:
            shown.append(f"{c}*q^{e}")
        more = " + ..." if len(self.terms()) > 8 else ""
        return f"TruncatedSeries({' + '.join(shown)}{more} + O(q^{self.order}))"

    def coefficient_list(self, start: int = 0) -> list:
        """Coefficients of ``q**start .. q**(order-1)`` as a list."""
        return [coefficient(self, n) for n in range(start, self.order)]

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop knowledge beyond ``order`` (which must not exceed the current one)."""
        if order > self.order:
            raise OrderExceeded(f"cannot raise order {self.order} to {order}")
        if self.is_zero or order <= self.valuation:
            return zero(order)
        return TruncatedSeries(self.valuation, self.coeffs[: order - self.valuation], order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Exact multiplication by ``q**k``."""
        if self.is_zero:
            return zero(self.order + k)
        return TruncatedSeries(self.valuation + k, self.coeffs, self.order + k)

    # -- operators -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(other, self.order)
        return sub(self, other)

    def __rsub__(self, other):
        return sub(constant(other, self.order), self)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return divide(self, other)

    def __pow__(self, e):
        return pow(self, e)


# -- constructors ---------------------------------------------------------


def make(valuation: int, coeffs: Sequence[int], order: int) -> TruncatedSeries:
    """Build a normalized series; ``len(coeffs)`` must equal ``order - valuation``."""
    return TruncatedSeries(valuation, coeffs, order)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (), order)


def constant(c: int, order: int) -> TruncatedSeries:
    if order <= 0:
        return zero(order)
    return TruncatedSeries(0, [c] + [0] * (order - 1), order)


def one(order: int) -> TruncatedSeries:
    return constant(1, order)


def monomial(k: int, order: int, c: int = 1) -> TruncatedSeries:
    """``c * q**k`` known to ``order``."""
    if k >= order:
        return zero(order)
    return TruncatedSeries(k, [c] + [0] * (order - k - 1), order)


def from_terms(terms: Iterable, order: int, valuation: int = 0) -> TruncatedSeries:
    """Series from ``(exponent, coefficient)`` pairs; terms at or past ``order`` are dropped.

    Repeated exponents are summed.  ``valuation`` is a lower bound on the
    exponents supplied.
    """
    if order <= valuation:
        return zero(order)
    buf = [0] * (order - valuation)
    for e, c in terms:
        if e < order:
            if e < valuation:
                raise ConstructionError(f"exponent {e} below stated valuation {valuation}")
            buf[e - valuation] += c
    return TruncatedSeries(valuation, buf, order)


# -- ring operations ------------------------------------------------------


def _aligned(A, B):
    order = min(A.order, B.order)
    lo = min(A.valuation, B.valuation, order)
    return lo, order


def add(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    lo, order = _aligned(A, B)
    buf = [0] * (order - lo)
    for S in (A, B):
        off = S.valuation - lo
        for i, c in enumerate(S.coeffs[: max(0, order - S.valuation)]):
            buf[off + i] += c
    return TruncatedSeries(lo, buf, order)


def scalar_mul(k: int, A: TruncatedSeries) -> TruncatedSeries:
    if k == 0:
        return zero(A.order)
    return TruncatedSeries(A.valuation, [k * c for c in A.coeffs], A.order)


def sub(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    return add(A, scalar_mul(-1, B))


def _is_sparse(coeffs) -> bool:
    nnz = len(coeffs) - coeffs.count(0)
    return nnz * SPARSE_RATIO <= len(coeffs)


def _sparse_terms(coeffs) -> list:
    return [(i, c) for i, c in enumerate(coeffs) if c]


def mul(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product; order = min(order_A + val_B, order_B + val_A)."""
    order = min(A.order + B.valuation, B.order + A.valuation)
    if A.is_zero or B.is_zero:
        return zero(order)
    n = min(len(A.coeffs), len(B.coeffs))
    a, b = list(A.coeffs[:n]), list(B.coeffs[:n])
    if _is_sparse(B.coeffs[:n]):
        c = kernels.mul_sparse(a, _sparse_terms(b), n)
    elif _is_sparse(A.coeffs[:n]):
        c = kernels.mul_sparse(b, _sparse_terms(a), n)
    else:
        c = kernels.mul_dense(a, b, n)
    return TruncatedSeries(A.valuation + B.valuation, c, order)


def mul_schoolbook(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """Reference product: plain O(N^2) schoolbook, no dispatch."""
    order = min(A.order + B.valuation, B.order + A.valuation)
    if A.is_zero or B.is_zero:
        return zero(order)
    n = min(len(A.coeffs), len(B.coeffs))
    c = [0] * n
    for i in range(n):
        ai = A.coeffs[i]
        if ai:
            for j in range(n - i):
                c[i + j] += ai * B.coeffs[j]
    return TruncatedSeries(A.valuation + B.valuation, c, order)


def _require_unit(B: TruncatedSeries, what: str):
    if B.is_zero:
        raise NonUnitLeading(f"cannot {what} the zero series (known to order {B.order})")
    if B.leading not in (1, -1):
        raise NonUnitLeading(
            f"cannot {what} a series with leading coefficient {B.leading} (need +1 or -1)"
        )


def divide(A: TruncatedSeries, B: TruncatedSeries) -> TruncatedSeries:
    """``A / B`` where ``B`` has leading coefficient +1 or -1."""
    _require_unit(B, "divide by")
    vb = B.valuation
    order = min(A.order - vb, B.order - 2 * vb + A.valuation)
    if A.is_zero:
        return zero(order)
    n = min(len(A.coeffs), len(B.coeffs))
    b = B.coeffs[:n]
    a = list(A.coeffs[:n])
    if _is_sparse(b):
        c = kernels.div_sparse(a, _sparse_terms(b), n)
    else:
        c = kernels.div_dense(a, list(b), n)
    return TruncatedSeries(A.valuation - vb, c, order)


def invert(A: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; the leading coefficient must be +1 or -1."""
    _require_unit(A, "invert")
    n = len(A.coeffs)
    if _is_sparse(A.coeffs):
        c = kernels.div_sparse([1], _sparse_terms(A.coeffs), n)
    else:
        c = kernels.div_dense([1], list(A.coeffs), n)
    return TruncatedSeries(-A.valuation, c, A.order - 2 * A.valuation)


def pow(A: TruncatedSeries, e: int) -> TruncatedSeries:
    """``A**e`` for any integer ``e``; negative ``e`` needs a unit leading coefficient."""
    if e < 0:
        _require_unit(A, "raise to a negative power")
    if A.is_zero:
        if e == 0:
            return one(0)
        return zero(A.order + (e - 1) * A.valuation)
    n = len(A.coeffs)
    if e == 0:
        return one(n)
    if e == 1:
        return A
    c = kernels.pow_terms(_sparse_terms(A.coeffs), e, n)
    v = e * A.valuation
    return TruncatedSeries(v, c, v + n)


# -- structural operations -----------------------------------------------


def substitute_power(A: TruncatedSeries, m: int) -> TruncatedSeries:
    """``q -> q**m``."""
    if m < 1:
        raise ValueError(f"substitution power must be >= 1, got {m}")
    if m == 1 or A.is_zero:
        return A if m == 1 else zero(m * A.order)
    v = m * A.valuation
    buf = [0] * (m * A.order - v)
    buf[::m] = A.coeffs
    return TruncatedSeries(v, buf, m * A.order)


def alternate_sign(A: TruncatedSeries) -> TruncatedSeries:
    """``q -> -q``: the coefficient of ``q**n`` picks up ``(-1)**n``."""
    v = A.valuation
    return TruncatedSeries(
        v, [-c if (v + i) % 2 else c for i, c in enumerate(A.coeffs)], A.order
    )


def substitute(A: TruncatedSeries, sign: int, m: int) -> TruncatedSeries:
    """``q -> sign * q**m`` (the sign is applied before the power map)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign == -1:
        A = alternate_sign(A)
    return substitute_power(A, m)


def extract(A: TruncatedSeries, spec) -> TruncatedSeries:
    """``sum_n A(a*n + b) q**n`` over n >= 0; order ``ceil((order_A - b)/a)``."""
    if not isinstance(spec, ExtractionSpec):
        spec = ExtractionSpec(*spec)
    a, b = spec.a, spec.b
    order = max(0, -((b - A.order) // a))
    v = A.valuation
    buf = []
    for n in range(order):
        i = a * n + b - v
        buf.append(A.coeffs[i] if 0 <= i < len(A.coeffs) else 0)
    return TruncatedSeries(0, buf, order)


def coefficient(A: TruncatedSeries, n: int) -> int:
    if n >= A.order:
        raise OrderExceeded(f"coefficient of q^{n} requested, series known only below q^{A.order}")
    i = n - A.valuation
    return A.coeffs[i] if i >= 0 else 0


def equal_to_order(A: TruncatedSeries, B: TruncatedSeries) -> VerificationReport:
    """Compare on every exponent below ``min(order_A, order_B)``."""
    hi = min(A.order, B.order)
    lo = min(0, A.valuation, B.valuation)
    for n in range(lo, hi):
        if coefficient(A, n) != coefficient(B, n):
            return VerificationReport(False, n - lo + 1, n, hi)
    return VerificationReport(True, max(0, hi - lo), None, hi)
