"""A small expression language over q-product atoms.

Grammar (whitespace is ignored)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' int)?
    base   := 'ph(' int ',' int ')' | 'f(' int ')' | 'theta(' sgn int ',' sgn int ')'
            | name '(' arg ')' | 'q' ('^' int)? | int | '(' expr ')' | '-' base
    arg    := '-'? 'q' ('^' int)?          (omega takes 'p' or 'm; a,b,.. / c,d,..')

Exponents after ``^`` may carry a sign.  Parse errors report the 1-based byte
offset of the offending token (or of the end of input).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple, Union

from .errors import NonUnitLeading, ParseError
from .products import (
    NAMED,
    ProductForm,
    ThetaAtom,
    _named_form,
    cubic_theta,
    explicit_form,
    residue_form,
    theta_f,
)
from .series import (
    TruncatedSeries,
    add,
    alternate_sign,
    divide,
    mul,
    pow as series_pow,
    scalar_mul,
    sub,
    substitute_power,
)

# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Poch:
    a: int
    b: int


@dataclass(frozen=True)
class Eta:
    k: int


@dataclass(frozen=True)
class Theta:
    s1: int
    r1: int
    s2: int
    r2: int


@dataclass(frozen=True)
class Named:
    name: str
    sign: int = 1
    power: int = 1


@dataclass(frozen=True)
class Omega:
    p: int


@dataclass(frozen=True)
class OmegaList:
    modulus: int
    num: Tuple[int, ...]
    den: Tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    k: int


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


Expr = Union[Poch, Eta, Theta, Named, Omega, OmegaList, Monomial, Const, BinOp, Pow, Neg]
ProductExpr = Expr


# -- tokenizer / parser -----------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []  # (kind, value, byte offset 1-based)
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            start = m.start(m.lastindex)
            off = len(text[:start].encode()) + 1
            if m.group(1) is not None:
                self.toks.append(("int", int(m.group(1)), off))
            elif m.group(2) is not None:
                self.toks.append(("id", m.group(2), off))
            else:
                self.toks.append(("op", m.group(3), off))
            pos = m.end()
        self.end = len(text.encode()) + 1
        self.i = 0

    # helpers
    def peek(self, value=None):
        if self.i >= len(self.toks):
            return None
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            return None
        return tok

    def offset(self):
        return self.toks[self.i][2] if self.i < len(self.toks) else self.end

    def fail(self, msg):
        raise ParseError(msg, self.offset())

    def take(self, value=None, kind=None):
        tok = self.peek()
        if tok is None:
            self.fail(f"expected {value or kind}, found end of input")
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            self.fail(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok

    def int_(self, minimum=None):
        tok = self.peek()
        if tok is None or tok[0] != "int":
            self.fail("expected integer" + ("" if tok is None else f", found {tok[1]!r}"))
        if minimum is not None and tok[1] < minimum:
            self.fail(f"integer must be >= {minimum}")
        self.i += 1
        return tok[1]

    def signed_int(self):
        sign = 1
        if self.peek("-"):
            self.i += 1
            sign = -1
        elif self.peek("+"):
            self.i += 1
        return sign * self.int_()

    # grammar
    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        e = self.expr()
        if self.i < len(self.toks):
            self.fail(f"unexpected {self.toks[self.i][1]!r}")
        return e

    def expr(self):
        e = self.term()
        while self.peek("+") or self.peek("-"):
            op = self.take()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.factor()
        while self.peek("*") or self.peek("/"):
            op = self.take()[1]
            e = BinOp(op, e, self.factor())
        return e

    def factor(self):
        b = self.base()
        if self.peek("^"):
            self.i += 1
            b = Pow(b, self.signed_int())
        return b

    def base(self):
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of input")
        kind, val, _ = tok
        if kind == "int":
            self.i += 1
            return Const(val)
        if val == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            return e
        if val == "-":
            self.i += 1
            return Neg(self.base())
        if kind != "id":
            self.fail(f"unexpected {val!r}")
        self.i += 1
        if val == "q":
            if self.peek("^"):
                self.i += 1
                return Monomial(self.signed_int())
            return Monomial(1)
        if val == "ph":
            self.take("(")
            a = self.int_(1)
            self.take(",")
            b = self.int_(1)
            self.take(")")
            return Poch(a, b)
        if val == "f":
            self.take("(")
            k = self.int_(1)
            self.take(")")
            return Eta(k)
        if val == "theta":
            self.take("(")
            s1, r1 = self._theta_arg()
            self.take(",")
            s2, r2 = self._theta_arg()
            if r1 + r2 < 1:
                self.fail("theta exponents must sum to at least 1")
            self.take(")")
            return Theta(s1, r1, s2, r2)
        if val == "omega":
            return self._omega()
        if val in NAMED:
            self.take("(")
            sign, power = self._inner_arg()
            self.take(")")
            return Named(val, sign, power)
        self.i -= 1
        self.fail(f"unknown name {val!r}")

    def _theta_arg(self):
        sign = 1
        if self.peek("-"):
            sign = -1
            self.i += 1
        elif self.peek("+"):
            self.i += 1
        return sign, self.int_(0)

    def _inner_arg(self):
        sign = 1
        if self.peek("-"):
            sign = -1
            self.i += 1
        tok = self.peek()
        if tok is None or tok[1] != "q":
            self.fail("expected argument q, q^m, -q or -q^m")
        self.i += 1
        power = 1
        if self.peek("^"):
            self.i += 1
            power = self.int_(1)
        return sign, power

    def _omega(self):
        self.take("(")
        off = self.offset()
        m = self.int_(2)
        if self.peek(";"):
            self.i += 1
            num = self._int_list(m)
            self.take("/")
            den = self._int_list(m)
            self.take(")")
            return OmegaList(m, tuple(num), tuple(den))
        self.take(")")
        try:
            residue_form(m)
        except ValueError as exc:
            raise ParseError(str(exc), off) from None
        return Omega(m)

    def _int_list(self, modulus):
        out = []
        if self.peek("/") or self.peek(")"):
            return out
        while True:
            off = self.offset()
            v = self.int_()
            if not 1 <= v <= modulus - 1:
                raise ParseError(f"exponent {v} outside [1, {modulus - 1}]", off)
            out.append(v)
            if not self.peek(","):
                return out
            self.i += 1


def parse(text: str) -> Expr:
    """Parse expression text into an AST; raises :class:`ParseError`."""
    return _Parser(text).parse()


# -- rendering --------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _q(sign, power):
    s = "-" if sign == -1 else ""
    return f"{s}q" if power == 1 else f"{s}q^{power}"


def render(e: Expr) -> str:
    """Expression text that parses back to ``e``."""
    return _render(e, 0)


def _atomic(e):
    return isinstance(e, (Poch, Eta, Theta, Named, Omega, OmegaList)) or (
        isinstance(e, Const) and e.value >= 0
    )


def _render(e, prec):
    if isinstance(e, Poch):
        return f"ph({e.a},{e.b})"
    if isinstance(e, Eta):
        return f"f({e.k})"
    if isinstance(e, Theta):
        sg = lambda s: "+" if s == 1 else "-"
        return f"theta({sg(e.s1)}{e.r1},{sg(e.s2)}{e.r2})"
    if isinstance(e, Named):
        return f"{e.name}({_q(e.sign, e.power)})"
    if isinstance(e, Omega):
        return f"omega({e.p})"
    if isinstance(e, OmegaList):
        num = ",".join(map(str, e.num))
        den = ",".join(map(str, e.den))
        return f"omega({e.modulus}; {num} / {den})"
    if isinstance(e, Monomial):
        s = "q" if e.k == 1 else f"q^{e.k}"
        return s if e.k == 1 or prec < 3 else f"({s})"
    if isinstance(e, Const):
        return str(e.value) if e.value >= 0 else f"(-{-e.value})"
    if isinstance(e, Neg):
        inner = _render(e.operand, 4)
        return f"-{inner}" if prec < 3 else f"(-{inner})"
    if isinstance(e, Pow):
        base = _render(e.base, 3)
        if not _atomic(e.base):
            base = base if base.startswith("(") and _wrapped(base) else f"({base})"
        s = f"{base}^{e.exponent}"
        return s if prec < 3 else f"({s})"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        left = _render(e.left, p)
        # left-associative: the right operand needs parens at equal precedence
        right = _render(e.right, p + 0.5)
        s = f"{left}{e.op}{right}" if p == 2 else f"{left} {e.op} {right}"
        return s if prec <= p else f"({s})"
    raise TypeError(f"not an expression node: {e!r}")


def _wrapped(s):
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(s) - 1:
            return False
    return True


# -- evaluation -------------------------------------------------------------


def _product_form(e: Expr):
    """ProductForm for product-only subtrees, else None."""
    if isinstance(e, Poch):
        return ProductForm(prog={(e.a, e.b): 1})
    if isinstance(e, Eta):
        return ProductForm(eta={e.k: 1})
    if isinstance(e, Named) and e.sign == 1:
        return _named_form(e.name, e.power)
    if isinstance(e, Omega):
        return residue_form(e.p)
    if isinstance(e, OmegaList):
        return explicit_form(e.num, e.den, e.modulus)
    if isinstance(e, Monomial):
        return ProductForm(shift=e.k)
    if isinstance(e, Const):
        return ProductForm(const=e.value)
    return None


class _Evaluator:
    """Evaluates nodes either to a ProductForm (exact) or to a TruncatedSeries at order M."""

    def __init__(self, M):
        self.M = M

    def node(self, e):
        pf = _product_form(e)
        if pf is not None:
            return pf
        if isinstance(e, Theta):
            return theta_f(ThetaAtom(e.s1, e.r1, e.s2, e.r2), self.M)
        if isinstance(e, Named):
            return self._named_series(e)
        if isinstance(e, Neg):
            v = self.node(e.operand)
            return v.scaled(-1) if isinstance(v, ProductForm) else scalar_mul(-1, v)
        if isinstance(e, Pow):
            v = self.node(e.base)
            if isinstance(v, ProductForm):
                return v.power(e.exponent)
            return series_pow(v, e.exponent)
        if isinstance(e, BinOp):
            lhs, rhs = self.node(e.left), self.node(e.right)
            if e.op in "+-":
                a, b = self.series(lhs), self.series(rhs)
                return add(a, b) if e.op == "+" else sub(a, b)
            lp, rp = isinstance(lhs, ProductForm), isinstance(rhs, ProductForm)
            if e.op == "*":
                if lp and rp:
                    return lhs * rhs
                if rp:
                    return rhs.multiply(lhs)
                if lp:
                    return lhs.multiply(rhs)
                return mul(lhs, rhs)
            if rp:
                if lp and rhs.is_unit:
                    return lhs * rhs.inverse()
                return rhs.divide(self.series(lhs))
            return divide(self.series(lhs), rhs)
        raise TypeError(f"not an expression node: {e!r}")

    def _named_series(self, e):
        m = e.power
        base_order = -(-self.M // m)
        if e.name == "aq":
            base = cubic_theta(base_order)
        else:
            base = _named_form(e.name, 1).expand(base_order)
        if e.sign == -1:
            base = alternate_sign(base)
        return substitute_power(base, m)

    def series(self, v):
        if isinstance(v, ProductForm):
            return v.expand(self.M)
        return v


def evaluate(expr, N: int) -> TruncatedSeries:
    """Expand ``expr`` (AST or text) to a series known exactly to order ``N``.

    Subexpressions with negative valuation can lose order, so the working
    order is raised until the result reaches ``N``.
    """
    if isinstance(expr, str):
        expr = parse(expr)
    M = N
    for _ in range(64):
        ev = _Evaluator(M)
        result = ev.series(ev.node(expr))
        if result.order >= N:
            return result.truncate(N)
        M += max(N - result.order, 1)
    raise ArithmeticError(f"could not reach order {N} for {render(expr)}")
