"""Algebraic invariants of the truncated-series layer, checked with hypothesis."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmatch.dsl import evaluate, parse
from qmatch.series import (
    add,
    alternate_sign,
    equal_to_order,
    extract,
    invert,
    make,
    monomial,
    mul,
    one,
    scalar_mul,
    sub,
    substitute,
    substitute_power,
    zero,
)

ORDER = 200

# series that occur in the catalog; parsed once, evaluated per test
CATALOG_EXPRS = [
    "f(1)", "ph(1,2)^8", "R(q)^5", "f(2)^5/(f(1)^2*f(4)^2)", "S(q)*T(q)", "X(-q)",
    "omega(13)", "G(q^2)/H(q)", "aq(q)", "chi(-q)^3",
]
_cache = {}


def catalog(text):
    if text not in _cache:
        _cache[text] = evaluate(parse(text), ORDER)
    return _cache[text]


coef = st.integers(-50, 50)


@st.composite
def series(draw, unit=False, max_len=25):
    v = 0 if unit else draw(st.integers(-3, 5))
    cs = draw(st.lists(coef, max_size=max_len))
    if unit:
        cs = [draw(st.sampled_from([1, -1]))] + cs
    pad = draw(st.integers(0, 10))
    return make(v, cs + [0] * pad, v + len(cs) + pad)


catalog_series = st.sampled_from(CATALOG_EXPRS).map(catalog)
any_series = st.one_of(series(), catalog_series)
unit_series = st.one_of(series(unit=True), catalog_series)


def agree(A, B):
    assert equal_to_order(A, B).passed


@settings(max_examples=80, deadline=None)
@given(any_series, any_series, any_series)
def test_ring_axioms(a, b, c):
    agree(add(a, b), add(b, a))
    agree(mul(a, b), mul(b, a))
    agree(add(add(a, b), c), add(a, add(b, c)))
    agree(mul(mul(a, b), c), mul(a, mul(b, c)))
    agree(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
    agree(sub(a, a), zero(a.order))


@settings(max_examples=80, deadline=None)
@given(any_series)
def test_identities(a):
    agree(mul(a, one(ORDER)), a)
    agree(add(a, zero(ORDER)), a)
    agree(scalar_mul(-1, scalar_mul(-1, a)), a)


@settings(max_examples=60, deadline=None)
@given(unit_series)
def test_inversion_roundtrip(a):
    inv = invert(a)
    assert inv.order == a.order
    agree(mul(a, inv), one(a.order))
    agree(invert(inv), a)


@settings(max_examples=60, deadline=None)
@given(catalog_series, st.integers(1, 7))
def test_dissection_completeness(a, m):
    total = zero(a.order)
    for r in range(m):
        piece = mul(monomial(r, a.order), substitute_power(extract(a, (m, r)), m))
        total = add(total, piece.truncate(min(piece.order, a.order)))
    assert total.order == a.order
    agree(total, a)


@settings(max_examples=60, deadline=None)
@given(any_series.filter(lambda s: s.valuation >= 0), st.integers(1, 6), st.sampled_from([1, -1]))
def test_extract_substitute_adjunction(a, m, sign):
    back = extract(substitute(a, sign, m), (m, 0))
    assert back.order == a.order
    agree(back, a if sign == 1 else alternate_sign(a))
    for r in range(1, m):
        assert extract(substitute_power(a, m), (m, r)).is_zero


@settings(max_examples=80, deadline=None)
@given(any_series, any_series)
def test_alternate_sign(a, b):
    assert alternate_sign(alternate_sign(a)) == a
    agree(alternate_sign(mul(a, b)), mul(alternate_sign(a), alternate_sign(b)))
    agree(alternate_sign(add(a, b)), add(alternate_sign(a), alternate_sign(b)))


@pytest.mark.parametrize("text", CATALOG_EXPRS)
def test_catalog_series_shape(text):
    S = catalog(text)
    assert S.order == ORDER and S.valuation == 0
