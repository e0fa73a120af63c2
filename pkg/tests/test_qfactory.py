import pytest

from oracles import partition_numbers, product_expand, theta_sum
from qmatch.dsl import evaluate, parse, render
from qmatch.errors import NonUnitLeading, ParseError
from qmatch.products import (
    ProductForm,
    PochhammerAtom,
    ThetaAtom,
    cubic_theta,
    euler_f,
    explicit_product,
    named,
    pochhammer,
    quadratic_residues,
    residue_product,
    theta_f,
)
from qmatch.series import equal_to_order, invert, mul


def coeffs(S, n=None):
    n = S.order if n is None else n
    return [S[i] for i in range(n)]


def E(text, N):
    return evaluate(parse(text), N)


def same(a, b):
    r = equal_to_order(a, b)
    return r.passed and r.checked_count == min(a.order, b.order)


# -- pochhammer, euler_f -----------------------------------------------------------


def test_pochhammer_pentagonal():
    assert coeffs(pochhammer(1, 1, 13)) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_pochhammer_small():
    assert coeffs(pochhammer(1, 2, 2)) == [1, -1]
    assert coeffs(pochhammer(5, 5, 5)) == [1, 0, 0, 0, 0]


def test_pochhammer_validation():
    with pytest.raises(ValueError):
        PochhammerAtom(0, 1)


def test_euler_f():
    got = coeffs(euler_f(1, 16))
    want = [0] * 16
    for e, c in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]:
        want[e] = c
    assert got == want
    assert coeffs(euler_f(2, 4)) == [1, 0, -1, 0]
    with pytest.raises(ValueError):
        euler_f(0, 5)


@pytest.mark.parametrize("k", range(1, 7))
def test_euler_vs_pochhammer(k):
    assert euler_f(k, 300) == pochhammer(k, k, 300)


def test_euler_vs_naive_product():
    assert coeffs(euler_f(1, 80)) == product_expand([(k, 1) for k in range(1, 80)], 80)


# -- theta -------------------------------------------------------------------------


def test_theta_phi():
    assert coeffs(theta_f(ThetaAtom(1, 1, 1, 1), 10)) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]


def test_theta_f1():
    assert theta_f(ThetaAtom(-1, 1, -1, 2), 16) == euler_f(1, 16)


def test_theta_psi():
    assert coeffs(theta_f(ThetaAtom(1, 1, 1, 3), 11)) == [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]


@pytest.mark.parametrize("atom", [(1, 2, 1, 3), (-1, 1, 1, 4), (-1, 3, -1, 7), (1, 5, -1, 1)])
def test_theta_vs_oracle(atom):
    assert coeffs(theta_f(ThetaAtom(*atom), 120)) == theta_sum(*atom, 120)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_theta_triple_product(k):
    assert theta_f(ThetaAtom(-1, k, -1, 2 * k), 200) == euler_f(k, 200)


def test_theta_validation():
    with pytest.raises(ValueError):
        ThetaAtom(2, 1, 1, 1)
    with pytest.raises(ValueError):
        ThetaAtom(1, 0, 1, 0)


def test_theta_zero_exponent_allowed():
    # f(1, q^2) = 2 psi(q^2)... in general f(1, a) = 2 f(a, a^3)
    assert same(theta_f(ThetaAtom(1, 0, 1, 2), 100), E("2*psi(q^2)", 100))


# -- named functions ---------------------------------------------------------------


def test_phi_psi_product_forms():
    assert same(theta_f(ThetaAtom(1, 1, 1, 1), 300), E("f(2)^5/(f(1)^2*f(4)^2)", 300))
    assert same(theta_f(ThetaAtom(1, 1, 1, 3), 300), E("f(2)^2/f(1)", 300))
    assert same(named("phi", (1, 1), 300), theta_f(ThetaAtom(1, 1, 1, 1), 300))


def test_G_times_H():
    assert same(E("G(q)*H(q)", 100), E("f(5)/f(1)", 100))


def test_R_two_paths():
    assert same(E("R(q)", 100), E("ph(1,5)*ph(4,5)/(ph(2,5)*ph(3,5))", 100))
    assert same(E("R(q)", 100), E("H(q)/G(q)", 100))


def test_ST_and_XY_products():
    assert same(E("S(q)*T(q)", 300), E("f(2)*f(8)^2/(f(1)*f(4)^2)", 300))
    assert same(E("X(q)*Y(q)", 300), E("f(12)^2*f(6)/(f(1)*f(2)*f(3))", 300))


def test_chi():
    assert same(E("chi(-q)", 100), E("f(1)/f(2)", 100))
    assert same(E("chi(q)", 100), E("ph(1,2)^-1*ph(1,2)*f(2)^2/(f(1)*f(4))", 100))


def test_cubic_theta():
    a = cubic_theta(30)
    assert coeffs(a, 5) == [1, 6, 0, 6, 6]
    # a(q) = phi(q) phi(q^3) + 4q psi(q^2) psi(q^6)
    assert same(a, E("phi(q)*phi(q^3) + 4*q*psi(q^2)*psi(q^6)", 30))


def test_named_negative_argument():
    direct = named("S", (-1, 3), 90)
    base = named("S", (1, 1), 30)
    for n in range(90):
        want = base[n // 3] * (-1) ** (n // 3) if n % 3 == 0 else 0
        assert direct[n] == want


def test_named_validation():
    with pytest.raises(ValueError):
        named("phi", (1, 0), 10)
    with pytest.raises(ValueError):
        named("nope", (1, 1), 10)


@pytest.mark.parametrize("name", ["phi", "psi", "chi", "R", "G", "H", "S", "T", "X", "Y", "aq"])
def test_builders_unit_leading(name):
    S = named(name, (1, 1), 50)
    assert S.valuation == 0 and S.leading == 1


# -- residue / explicit products ---------------------------------------------------------


def test_residue_product_5_is_inverse_R():
    assert same(residue_product(5, 100), invert(E("R(q)", 100)))


def test_quadratic_residues():
    assert quadratic_residues(13) == [1, 3, 4, 9, 10, 12]


def test_residue_product_validation():
    with pytest.raises(ValueError):
        residue_product(4, 10)
    with pytest.raises(ValueError):
        residue_product(2, 10)


def test_explicit_product():
    assert same(explicit_product([2], [1], 3, 60), E("ph(2,3)/ph(1,3)", 60))
    assert same(explicit_product([], [], 5, 20), E("1", 20))
    with pytest.raises(ValueError):
        explicit_product([3], [], 3, 10)


def test_omega21_two_routes():
    a = E("omega(21; 2,8,10,11,13,19 / 1,4,5,16,17,20)", 200)
    b = E("ph(2,21)*ph(8,21)*ph(10,21)*ph(11,21)*ph(13,21)*ph(19,21)"
          "/(ph(1,21)*ph(4,21)*ph(5,21)*ph(16,21)*ph(17,21)*ph(20,21))", 200)
    assert same(a, b)


# -- parser ------------------------------------------------------------------------------


def test_parse_alpha():
    assert E("ph(1,2)^8", 5)[1] == -8


def test_parse_quotient_cancels():
    assert same(E("f(1)/f(5)", 10), E("ph(1,5)*ph(2,5)*ph(3,5)*ph(4,5)", 10))


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse("R(q^16")
    assert info.value.offset == 7


@pytest.mark.parametrize("bad", ["", "ph(1,)", "f(1", "q^", "theta(+0,+0)", "R(x)", "2 3", "phi(q^0)"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, ValueError)):
        evaluate(parse(bad), 10)


def test_precedence():
    assert same(E("1 + q*q^2", 10), E("1 + q^3", 10))
    assert same(E("-q^2", 10), E("0 - q^2", 10))
    assert same(E("f(1)^2/f(2)*f(4)", 30), E("(f(1)^2/f(2))*f(4)", 30))


def test_negative_q_power():
    S = E("q^-2*f(1)", 10)
    assert S.valuation == -2 and S[-2] == 1


def test_non_unit_division():
    with pytest.raises(NonUnitLeading):
        E("1/(2+q)", 10)
    with pytest.raises(NonUnitLeading):
        E("(2+q)^-1", 10)


def test_partition_via_parser():
    assert coeffs(E("ph(1,1)^-1", 50)) == partition_numbers(50)


@pytest.mark.parametrize("text", [
    "ph(1,2)^8", "f(1)^3/f(3)^3", "theta(+1,-2)*q^3", "R(q)^-5 + q^2*R(q)^5", "S(-q)*T(q^4)",
    "omega(13)", "omega(21; 2,8,10,11,13,19 / 1,4,5,16,17,20)", "-(f(1) - 2*q)", "aq(q)*chi(-q^3)",
])
def test_render_roundtrip(text):
    e = parse(text)
    assert parse(render(e)) == e
    assert evaluate(parse(render(e)), 80) == evaluate(e, 80)


def test_product_form_fast_path_matches_general():
    text = "f(2)^2*f(5)/(f(1)*f(10))"
    assert same(E(text, 200), mul(E("psi(q)", 200), E("f(5)/f(10)", 200)))
    assert isinstance(ProductForm(eta={1: 1}), ProductForm)
