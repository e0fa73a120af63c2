import pytest

from oracles import partition_numbers
from qmatch.errors import ConstructionError, NonUnitLeading, OrderExceeded
from qmatch.products import euler_f, pochhammer
from qmatch.series import (
    ExtractionSpec,
    TruncatedSeries,
    VerificationReport,
    add,
    alternate_sign,
    coefficient,
    constant,
    divide,
    equal_to_order,
    extract,
    invert,
    make,
    monomial,
    mul,
    mul_schoolbook,
    one,
    pow,
    scalar_mul,
    sub,
    substitute,
    substitute_power,
    zero,
)


def S(coeffs, order=None, val=0):
    order = val + len(coeffs) if order is None else order
    return make(val, list(coeffs) + [0] * (order - val - len(coeffs)), order)


def test_make_constant():
    s = make(0, [1] + [0] * 9, 10)
    assert s.valuation == 0 and s.coeffs == (1,) + (0,) * 9 and s.order == 10


def test_make_normalizes_leading_zeros():
    s = make(0, [0, 0, 3], 3)
    assert (s.valuation, s.coeffs, s.order) == (2, (3,), 3)


def test_make_laurent():
    s = make(-1, [1, 1], 1)
    assert s[-1] == 1 and s[0] == 1


def test_make_length_mismatch():
    with pytest.raises(ConstructionError):
        make(0, [1, 2], 5)


def test_zero_series_keeps_order():
    z = make(0, [0, 0, 0], 3)
    assert z.is_zero and z.order == 3 and z.coeffs == ()


def test_add_sub_scalar():
    assert add(one(5), constant(-1, 5)).is_zero
    assert add(monomial(1, 5), monomial(2, 5)) == S([0, 1, 1], 5)
    assert scalar_mul(-8, S([1, 1], 5)) == S([-8, -8], 5)
    assert sub(S([1, 2], 4), S([1, 2], 6)).is_zero


def test_add_order_is_min():
    assert add(one(4), one(9)).order == 4


def test_mul_basic():
    assert mul(S([1, -1], 10), S([1, 1], 10)) == S([1, 0, -1], 10)


def test_mul_order_rule():
    A = S([0, 1], 7)  # q, valuation 1, order 7
    B = S([1], 5)
    C = mul(A, B)
    assert C.order == min(7 + 0, 5 + 1)


def test_mul_laurent_valuation():
    C = mul(monomial(-1, 5), monomial(1, 5))
    assert C.valuation == 0 and C[0] == 1 and C.order == 4


def test_f1_times_inverse_is_one():
    f1 = euler_f(1, 13)
    assert equal_to_order(mul(f1, invert(f1)), one(13)).passed


def test_invert_partition_numbers():
    p = invert(euler_f(1, 60))
    assert [p[n] for n in range(60)] == partition_numbers(60)
    assert [p[n] for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_invert_one_and_valuation():
    assert invert(one(5)) == one(5)
    B = invert(S([0, 1, 1], 6))
    assert B.valuation == -1


def test_invert_non_unit():
    with pytest.raises(NonUnitLeading):
        invert(S([2, 1], 5))


def test_invert_zero():
    with pytest.raises((NonUnitLeading, ZeroDivisionError, ValueError)):
        invert(zero(5))


def test_divide_non_unit():
    with pytest.raises(NonUnitLeading):
        divide(one(5), S([-2, 1], 5))


def test_pow_binomial():
    P = pow(S([1, -1], 10), 8)
    assert [P[n] for n in range(4)] == [1, -8, 28, -56]


def test_pow_zero_and_negative():
    A = euler_f(1, 20)
    assert pow(A, 0) == one(20)
    assert pow(A, -1)[4] == 5


def test_pow_matches_repeated_mul():
    A = euler_f(1, 40)
    assert pow(A, 3) == mul(mul(A, A), A)
    assert equal_to_order(pow(A, -3), invert(mul(mul(A, A), A))).passed


def test_substitute_power():
    assert substitute_power(S([1, 1], 10), 5) == S([1, 0, 0, 0, 0, 1], 50)
    A = euler_f(1, 30)
    assert substitute_power(A, 1) == A
    assert equal_to_order(substitute_power(euler_f(1, 25), 2), euler_f(2, 50)).passed


def test_alternate_sign():
    assert alternate_sign(S([1, 1, 1])) == S([1, -1, 1])
    A = euler_f(3, 40)
    assert alternate_sign(alternate_sign(A)) == A


def test_alternate_sign_laurent():
    A = make(-3, [1, 2, 3, 4], 1)
    assert alternate_sign(A)[-3] == -1 and alternate_sign(A)[-2] == 2


def test_alternate_sign_matches_direct_product():
    # (q;q^2)^8 at -q equals (-q;q^2)^8 built as 1/(q;q^2)^8 * (q^2;q^4)^8
    A = pow(pochhammer(1, 2, 50), 8)
    direct = divide(pow(pochhammer(2, 4, 50), 8), pow(pochhammer(1, 2, 50), 8))
    assert equal_to_order(alternate_sign(A), direct).passed


def test_substitute_negative_argument():
    A = euler_f(1, 20)
    assert substitute(A, -1, 3) == substitute_power(alternate_sign(A), 3)


def test_extract_direct():
    A = S([1, 2, 3, 4, 5], 5)
    E = extract(A, ExtractionSpec(2, 1))
    assert E == S([2, 4], 2)
    assert extract(A, (1, 0)) == A


def test_extract_order_rule():
    A = one(11)
    assert extract(A, (3, 2)).order == -(-(11 - 2) // 3)
    assert extract(one(3), (5, 7)).order == 0


def test_extract_below_valuation_reads_zero():
    A = make(2, [1, 1], 4)
    assert extract(A, (2, 0))[0] == 0 and extract(A, (2, 0))[1] == 1


def test_extraction_spec_validation():
    with pytest.raises(ValueError):
        ExtractionSpec(0, 1)
    with pytest.raises(ValueError):
        ExtractionSpec(2, -1)


def test_alpha_extraction():
    A = pow(pochhammer(1, 2, 81), 8)
    lhs = extract(A, (2, 1))
    # U_{2n+1} maps the odd part -8q/(q^2;q^4)^8 to -8/(q;q^2)^8
    rhs = scalar_mul(-8, invert(pow(pochhammer(1, 2, 40), 8)))
    assert lhs.order == 40
    assert equal_to_order(lhs, rhs).passed
    odd = substitute_power(lhs, 2)
    assert equal_to_order(mul(monomial(1, 81), odd), scalar_mul(-8, mul(monomial(1, 81), invert(pow(pochhammer(2, 4, 81), 8))))).passed


def test_coefficient():
    f1 = euler_f(1, 10)
    assert coefficient(f1, 5) == 1
    assert coefficient(f1, 3) == 0
    with pytest.raises(OrderExceeded):
        coefficient(one(5), 7)
    assert coefficient(make(2, [1], 3), 0) == 0


def test_equal_to_order():
    r = equal_to_order(S([1, 0, -1], 5), mul(S([1, -1], 5), S([1, 1], 5)))
    assert r.passed and r.first_failure_n is None and r.checked_count == 5
    r = equal_to_order(one(5), S([1, 1], 5))
    assert not r.passed and r.first_failure_n == 1


def test_report_invariants():
    with pytest.raises(ValueError):
        VerificationReport(True, 3, 2, 10)
    with pytest.raises(ValueError):
        VerificationReport(False, -1, 0, 10)


def test_schoolbook_reference():
    A = pow(euler_f(1, 120), 5)
    B = invert(euler_f(2, 120))
    assert mul(A, B) == mul_schoolbook(A, B)


def test_immutable():
    s = one(3)
    with pytest.raises(AttributeError):
        s.order = 4


def test_truncate():
    s = euler_f(1, 20).truncate(8)
    assert s.order == 8
    with pytest.raises(OrderExceeded):
        s.truncate(9)


def test_isinstance():
    assert isinstance(euler_f(1, 5), TruncatedSeries)
