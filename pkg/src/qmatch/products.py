"""Builders for q-products, theta series and the named functions.

Products are kept symbolic as a :class:`ProductForm` for as long as possible.
Multiplying a series by a product form costs one pass per ``(1 - q^k)``
factor (or one sparse pass per eta factor), which is much cheaper than a
dense Cauchy product at the orders the verifier runs at.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import kernels
from .errors import NonUnitLeading
from .series import (
    TruncatedSeries,
    alternate_sign,
    from_terms,
    substitute_power,
    zero,
)


@lru_cache(maxsize=256)
def pentagonal_terms(d: int, n: int) -> tuple:
    """Nonzero terms ``(exponent, sign)`` of ``f_d`` below ``q**n``, ascending."""
    out = [(0, 1)]
    k = 1
    while True:
        g1 = d * k * (3 * k - 1) // 2
        if g1 >= n:
            break
        s = -1 if k % 2 else 1
        out.append((g1, s))
        g2 = d * k * (3 * k + 1) // 2
        if g2 < n:
            out.append((g2, s))
        k += 1
    return tuple(out)


def _merge(dst, src, scale=1):
    for k, e in src.items():
        v = dst.get(k, 0) + scale * e
        if v:
            dst[k] = v
        else:
            dst.pop(k, None)


class ProductForm:
    """``const * q**shift * prod f_d**eta[d] * prod (q^a;q^b)**prog[(a,b)] * prod (1-q^k)**fin[k]``.

    Treated as immutable: every operation returns a new object.
    """

    __slots__ = ("const", "shift", "eta", "prog", "fin")

    def __init__(self, const=1, shift=0, eta=None, prog=None, fin=None):
        self.const = const
        self.shift = shift
        self.eta = {}
        self.prog = {}
        self.fin = {}
        _merge(self.eta, eta or {})
        _merge(self.fin, fin or {})
        for (a, b), e in (prog or {}).items():
            self._add_prog(a, b, e)

    def _add_prog(self, a, b, e):
        if a < 1 or b < 1:
            raise ValueError(f"(q^{a};q^{b}) needs a, b >= 1")
        if a % b == 0:
            # (q^{mb};q^b) = f_b / prod_{j<m} (1 - q^{jb})
            _merge(self.eta, {b: e})
            _merge(self.fin, {j * b: -e for j in range(1, a // b)})
        else:
            _merge(self.prog, {(a, b): e})

    def __repr__(self):
        return (
            f"ProductForm(const={self.const}, shift={self.shift}, eta={self.eta}, "
            f"prog={self.prog}, fin={self.fin})"
        )

    def __eq__(self, other):
        if not isinstance(other, ProductForm):
            return NotImplemented
        return (self.const, self.shift, self.eta, self.prog, self.fin) == (
            other.const,
            other.shift,
            other.eta,
            other.prog,
            other.fin,
        )

    __hash__ = None

    def __mul__(self, other: "ProductForm") -> "ProductForm":
        out = ProductForm(self.const * other.const, self.shift + other.shift)
        for attr in ("eta", "prog", "fin"):
            d = dict(getattr(self, attr))
            _merge(d, getattr(other, attr))
            setattr(out, attr, d)
        return out

    def power(self, e: int) -> "ProductForm":
        if e < 0 and self.const not in (1, -1):
            raise NonUnitLeading(
                f"cannot raise a product with leading coefficient {self.const} to a negative power"
            )
        if e == 0:
            return ProductForm()
        const = self.const ** e if e > 0 else self.const ** (-e)
        out = ProductForm(const, self.shift * e)
        out.eta = {k: v * e for k, v in self.eta.items()}
        out.prog = {k: v * e for k, v in self.prog.items()}
        out.fin = {k: v * e for k, v in self.fin.items()}
        return out

    def inverse(self) -> "ProductForm":
        return self.power(-1)

    def scaled(self, c: int) -> "ProductForm":
        out = self * ProductForm()
        out.const = self.const * c
        return out

    def substitute_power(self, m: int) -> "ProductForm":
        """The same product with ``q -> q**m``."""
        out = ProductForm(self.const, self.shift * m)
        out.eta = {k * m: v for k, v in self.eta.items()}
        out.prog = {(a * m, b * m): v for (a, b), v in self.prog.items()}
        out.fin = {k * m: v for k, v in self.fin.items()}
        return out

    @property
    def is_unit(self):
        return self.const in (1, -1)

    # -- expansion -----------------------------------------------------

    def _apply_units(self, c: list, sign: int) -> None:
        """Multiply ``c`` in place by the unit part raised to ``sign`` (+1 or -1)."""
        n = len(c)
        counts = defaultdict(int)
        for (a, b), e in self.prog.items():
            for k in range(a, n, b):
                counts[k] += e
        for k, e in self.fin.items():
            if k < n:
                counts[k] += e
        for k in sorted(counts):
            if counts[k]:
                kernels.factor_apply(c, k, sign * counts[k])
        for d in sorted(self.eta):
            g = sign * self.eta[d]
            if d >= n:
                continue
            terms = list(pentagonal_terms(d, n))
            for _ in range(abs(g)):
                if g > 0:
                    c[:] = kernels.mul_sparse(c, terms, n)
                else:
                    c[:] = kernels.div_sparse(c, terms, n)

    def expand(self, order: int) -> TruncatedSeries:
        """The product as a series known to ``order``."""
        n = order - self.shift
        if n <= 0 or self.const == 0:
            return zero(order)
        c = [1] + [0] * (n - 1)
        self._apply_units(c, 1)
        if self.const != 1:
            c = [self.const * x for x in c]
        return TruncatedSeries(self.shift, c, order)

    def multiply(self, A: TruncatedSeries) -> TruncatedSeries:
        """``A * self``; exact, so the order moves by ``shift`` only."""
        order = A.order + self.shift
        if A.is_zero or self.const == 0:
            return zero(order)
        c = list(A.coeffs)
        self._apply_units(c, 1)
        if self.const != 1:
            c = [self.const * x for x in c]
        return TruncatedSeries(A.valuation + self.shift, c, order)

    def divide(self, A: TruncatedSeries) -> TruncatedSeries:
        """``A / self``; the constant must be +1 or -1."""
        if not self.is_unit:
            raise NonUnitLeading(
                f"cannot divide by a product with leading coefficient {self.const}"
            )
        order = A.order - self.shift
        if A.is_zero:
            return zero(order)
        c = list(A.coeffs)
        self._apply_units(c, -1)
        if self.const == -1:
            c = [-x for x in c]
        return TruncatedSeries(A.valuation - self.shift, c, order)


# -- atoms ------------------------------------------------------------------


@dataclass(frozen=True)
class PochhammerAtom:
    a: int
    b: int
    exponent: int = 1

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"(q^{self.a};q^{self.b}) needs a, b >= 1")

    def form(self) -> ProductForm:
        return ProductForm(prog={(self.a, self.b): self.exponent})


@dataclass(frozen=True)
class ThetaAtom:
    """``f(s1*q**r1, s2*q**r2)``; the bilateral sum converges once ``r1 + r2 >= 1``."""

    s1: int
    r1: int
    s2: int
    r2: int

    def __post_init__(self):
        if self.s1 not in (1, -1) or self.s2 not in (1, -1):
            raise ValueError("theta signs must be +1 or -1")
        if self.r1 + self.r2 < 1:
            raise ValueError(f"theta exponents must satisfy r1 + r2 >= 1, got {self.r1}, {self.r2}")

    def exponent(self, n: int) -> int:
        return (self.r1 * n * (n + 1) + self.r2 * n * (n - 1)) // 2

    def sign(self, n: int) -> int:
        s = 1
        if self.s1 == -1 and (n * (n + 1) // 2) % 2:
            s = -s
        if self.s2 == -1 and (n * (n - 1) // 2) % 2:
            s = -s
        return s

    def terms(self, order: int) -> list:
        # exponent(n) = (r1+r2)/2 n^2 + (r1-r2)/2 n; convex in n
        w = self.r1 + self.r2
        d = abs(self.r1 - self.r2)
        bound = (d + isqrt(d * d + 8 * w * max(order, 0))) // (2 * w) + 2
        out = []
        for n in range(-bound, bound + 1):
            e = self.exponent(n)
            if e < order:
                out.append((e, self.sign(n)))
        return out


def theta_f(atom: ThetaAtom, N: int) -> TruncatedSeries:
    """Direct bilateral sum for the theta atom, to order ``N``."""
    terms = atom.terms(N)
    lo = min([e for e, _ in terms] + [N])
    return from_terms(terms, N, valuation=lo)


def pochhammer(a: int, b: int, N: int) -> TruncatedSeries:
    """``(q^a;q^b)_inf`` to order ``N`` by multiplying out the factors below ``q**N``."""
    PochhammerAtom(a, b)
    if N <= 0:
        return zero(N)
    c = [1] + [0] * (N - 1)
    for k in range(a, N, b):
        kernels.factor_apply(c, k, 1)
    return TruncatedSeries(0, c, N)


def euler_f(k: int, N: int) -> TruncatedSeries:
    """``f_k = (q^k;q^k)_inf`` from the pentagonal number series."""
    if k < 1:
        raise ValueError(f"f_k needs k >= 1, got {k}")
    return from_terms(pentagonal_terms(k, max(N, 0)), N)


def eta_form(**powers) -> ProductForm:
    return ProductForm(eta={int(k[1:]): v for k, v in powers.items()})


def _named_form(name: str, m: int):
    """Product form of a named function at ``q**m``; None when it has no product form."""
    if name == "phi":
        return ProductForm(eta={2 * m: 5, m: -2, 4 * m: -2})
    if name == "psi":
        return ProductForm(eta={2 * m: 2, m: -1})
    if name == "chi":
        return ProductForm(eta={2 * m: 2, m: -1, 4 * m: -1})
    if name == "G":
        return ProductForm(prog={(m, 5 * m): -1, (4 * m, 5 * m): -1})
    if name == "H":
        return ProductForm(prog={(2 * m, 5 * m): -1, (3 * m, 5 * m): -1})
    if name == "R":
        return ProductForm(
            prog={(m, 5 * m): 1, (4 * m, 5 * m): 1, (2 * m, 5 * m): -1, (3 * m, 5 * m): -1}
        )
    if name == "S":
        return ProductForm(prog={(r * m, 8 * m): -1 for r in (1, 4, 7)})
    if name == "T":
        return ProductForm(prog={(r * m, 8 * m): -1 for r in (3, 4, 5)})
    if name == "X":
        return ProductForm(prog={(r * m, 12 * m): 1 for r in (1, 11, 12)}, eta={m: -1})
    if name == "Y":
        return ProductForm(prog={(r * m, 12 * m): 1 for r in (5, 7, 12)}, eta={m: -1})
    return None


NAMED = ("phi", "psi", "chi", "R", "G", "H", "S", "T", "X", "Y", "aq")


def cubic_theta(N: int) -> TruncatedSeries:
    """``a(q) = sum over all j, k of q**(j*j + j*k + k*k)``, by lattice enumeration."""
    if N <= 0:
        return zero(N)
    c = [0] * N
    bound = isqrt(4 * N // 3 + 1) + 2
    for j in range(-bound, bound + 1):
        for k in range(-bound, bound + 1):
            e = j * j + j * k + k * k
            if e < N:
                c[e] += 1
    return TruncatedSeries(0, c, N)


def named(name: str, arg, N: int) -> TruncatedSeries:
    """A named function evaluated at ``arg = (sign, m)``, i.e. at ``sign * q**m``, to order ``N``."""
    sign, m = arg
    if sign not in (1, -1) or m < 1:
        raise ValueError(f"inner argument must be q^m or -q^m with m >= 1, got {arg}")
    if name not in NAMED:
        raise ValueError(f"unknown function {name!r}")
    if sign == 1:
        form = _named_form(name, m)
        if form is not None:
            return form.expand(N)
    base_order = -(-N // m)
    if name == "aq":
        base = cubic_theta(base_order)
    else:
        base = _named_form(name, 1).expand(base_order)
    if sign == -1:
        base = alternate_sign(base)
    return substitute_power(base, m).truncate(N)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, isqrt(p) + 1))


def quadratic_residues(p: int) -> list:
    return sorted({(x * x) % p for x in range(1, p)})


def residue_form(p: int) -> ProductForm:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"omega_p needs an odd prime, got {p}")
    res = set(quadratic_residues(p))
    prog = {(r, p): (-1 if r in res else 1) for r in range(1, p)}
    return ProductForm(prog=prog)


def explicit_form(num, den, modulus: int) -> ProductForm:
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    prog = defaultdict(int)
    for sign, exps in ((1, num), (-1, den)):
        for e in exps:
            if not 1 <= e <= modulus - 1:
                raise ValueError(f"exponent {e} outside [1, {modulus - 1}]")
            prog[(e, modulus)] += sign
    return ProductForm(prog=dict(prog))


def residue_product(p: int, N: int) -> TruncatedSeries:
    """``omega_p``: non-residue progressions over residue progressions modulo ``p``."""
    return residue_form(p).expand(N)


def explicit_product(num, den, modulus: int, N: int) -> TruncatedSeries:
    """``prod (q^e;q^modulus)`` over ``num`` divided by the same over ``den``."""
    return explicit_form(num, den, modulus).expand(N)
