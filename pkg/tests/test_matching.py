import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmatch.dsl import evaluate, parse
from qmatch.errors import InsufficientOrder, NonUnitLeading
from qmatch.matching import (
    MatchRelation,
    prune,
    reciprocal_pair,
    scan,
    vanishing_progressions,
    verify_relation,
)
from qmatch.series import constant, mul, one, equal_to_order

ALPHA = MatchRelation(1, 2, 1, -8, 1, 0)
DELTA52 = MatchRelation(1, 5, 2, -1, 1, 0)


def test_reciprocal_pair_alpha():
    A, B = reciprocal_pair("ph(1,2)^8", 50)
    assert A[1] == -8 and B[0] == 1
    assert all(B[n] >= 0 for n in range(50))
    assert equal_to_order(mul(A, B), one(50)).passed


def test_reciprocal_pair_trivial_and_delta():
    A, B = reciprocal_pair("1", 10)
    assert A == B == one(10)
    A, B = reciprocal_pair("f(1)^2/f(5)^2", 10)
    assert A[2] == -1 and B[0] == 1


def test_reciprocal_pair_non_unit():
    with pytest.raises(NonUnitLeading):
        reciprocal_pair("2 + q", 10)


def test_convolution_identity():
    A, B = reciprocal_pair("R(q)^5*f(3)", 120)
    for n in range(120):
        assert sum(A[k] * B[n - k] for k in range(n + 1)) == (n == 0)


def test_verify_alpha():
    A, B = reciprocal_pair("ph(1,2)^8", 400)
    rep = verify_relation(A, B, ALPHA)
    assert rep.passed and rep.checked_count >= 199 and rep.first_failure_n is None


def test_verify_delta52():
    A, B = reciprocal_pair("f(1)^2/f(5)^2", 500)
    assert verify_relation(A, B, DELTA52).passed


def test_verify_trivial_constant():
    one_ = constant(1, 200)
    assert verify_relation(one_, one_, MatchRelation(1, 2, 1, 1, 2, 1)).passed


def test_failure_reports_witness():
    A, B = reciprocal_pair("ph(1,2)^8", 400)
    rep = verify_relation(A, B, MatchRelation(1, 2, 1, 8, 1, 0))
    assert not rep.passed and rep.first_failure_n == 0 and rep.checked_count == 1


def test_insufficient_order_is_distinct():
    A, B = reciprocal_pair("ph(1,2)^8", 60)
    with pytest.raises(InsufficientOrder):
        verify_relation(A, B, ALPHA, min_checks=50)
    assert verify_relation(A, B, ALPHA, min_checks=30).passed
    with pytest.raises(ValueError):
        verify_relation(A, B, ALPHA, min_checks=0)


def test_min_order_is_tight():
    for rel in (ALPHA, DELTA52, MatchRelation(2, 10, 3, -1, 5, 3), MatchRelation(1, 77, 76, 1, 77, 76)):
        N = rel.min_order(50)
        assert rel.checks_available(N, N) == 50
        assert rel.checks_available(N - 1, N - 1) == 49


def test_omega77_min_order():
    assert MatchRelation(1, 77, 76, 1, 77, 76).min_order(50) == 77 * 49 + 76 + 1


def test_json_roundtrip_and_schema():
    text = DELTA52.to_json()
    assert json.loads(text) == {"cA": 1, "aA": 5, "rA": 2, "cB": -1, "aB": 1, "rB": 0}
    assert MatchRelation.from_json(text) == DELTA52
    with pytest.raises(ValueError):
        MatchRelation.from_dict({"cA": 1})


@pytest.mark.parametrize("bad", [(0, 1, 0, 1, 1, 0), (1, 1, 0, 0, 1, 0), (1, 0, 0, 1, 1, 0), (1, 1, -1, 1, 1, 0)])
def test_relation_validation(bad):
    with pytest.raises(ValueError):
        MatchRelation(*bad)


def test_residues_not_normalized():
    rel = MatchRelation(1, 7, 12, 1, 7, 5)
    assert rel.rA == 12 and str(rel) == "A(7n+12) = B(7n+5)"


rels = st.builds(MatchRelation, st.integers(1, 4), st.integers(1, 6), st.integers(0, 12),
                 st.integers(-4, 4).filter(bool), st.integers(1, 6), st.integers(0, 12))


@settings(max_examples=60, deadline=None)
@given(rels)
def test_swap_symmetry(rel):
    A, B = reciprocal_pair("f(1)^3/f(2)", 150)
    sw = rel.swapped()
    assert sw.swapped() == rel
    fwd = verify_relation(A, B, rel, min_checks=5)
    back = verify_relation(B, A, sw, min_checks=5)
    assert fwd.passed == back.passed
    if fwd.passed:
        assert fwd.checked_count == back.checked_count


def test_swap_symmetry_on_true_relation():
    A, B = reciprocal_pair("f(1)^2/f(5)^2", 500)
    assert verify_relation(B, A, DELTA52.swapped()).passed


def test_implies_and_prune():
    coarse = MatchRelation(1, 2, 1, -8, 1, 0)
    fine = MatchRelation(1, 4, 3, -8, 2, 1)
    assert coarse.implies(fine) and not fine.implies(coarse)
    assert not coarse.implies(MatchRelation(1, 4, 3, 8, 2, 1))
    assert not coarse.implies(MatchRelation(1, 4, 3, -8, 2, 0))
    assert prune([fine, coarse, fine]) == [coarse]


def test_scan_alpha():
    A, B = reciprocal_pair("ph(1,2)^8", 400)
    found = scan(A, B, 2)
    assert ALPHA in found
    for rel in found:
        assert verify_relation(A, B, rel).passed


def test_scan_delta52():
    A, B = reciprocal_pair("f(1)^2/f(5)^2", 500)
    found = scan(A, B, 5)
    assert DELTA52 in found
    for rel in found:
        assert verify_relation(A, B, rel).passed


def test_scan_f1_finds_nothing():
    A, B = reciprocal_pair("f(1)", 500)
    assert scan(A, B, 2) == []


def test_scan_constant_empty():
    A, B = reciprocal_pair("1", 100)
    assert scan(A, B, 3, min_checks=20) == []
    assert vanishing_progressions(A, B, 1, min_checks=20) == [(1, 1, 1, 1), (1, 1, 1, 2), (1, 2, 1, 1), (1, 2, 1, 2)]


def test_scan_vanishing_reported_separately():
    A, B = reciprocal_pair("f(2)", 200)
    assert scan(A, B, 2) == []
    van = vanishing_progressions(A, B, 2)
    assert (2, 1, 2, 1) in van


def test_series_pickle_roundtrip():
    import pickle

    A, _ = reciprocal_pair("q^-1*f(1)", 30)
    assert pickle.loads(pickle.dumps(A)) == A


def test_scan_deterministic_with_jobs():
    A, B = reciprocal_pair("ph(1,2)^8", 300)
    assert scan(A, B, 4, jobs=1) == scan(A, B, 4, jobs=2)


def test_scan_validation():
    A, B = reciprocal_pair("f(1)", 100)
    with pytest.raises(ValueError):
        scan(A, B, 0)
