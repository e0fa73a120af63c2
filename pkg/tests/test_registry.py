import json

import pytest

from qmatch.errors import InsufficientOrder, UnknownId
from qmatch.matching import MatchRelation, scan, vanishing_progressions, verify_relation
from qmatch.registry import (
    ALIASES,
    REGISTRY,
    export_catalog,
    get_entry,
    list_ids,
    verify_all,
    verify_entry,
    verify_p_dissection,
    verify_theta_lemma,
)
from qmatch.registry.core import _reciprocal, _series
from qmatch.registry.dissections import default_grid, phi_side_condition, psi_side_condition
from qmatch.registry.theorems import gamma1_sign

PROOF_INTERNAL = [
    "Ident4", "RqRq4", "E_6Trick1", "E_6Trick2", "E_6Trick3", "Sameway1", "ixnew", "GuggMu1",
    "GuggMu2", "GuggMu11", "GuggMu22", "Ident2", "Ident3", "Ident8", "P2", "GoOne", "XYq",
    "First12Gen", "Second12Gen", "f33", "TrickIden1", "36n+5Trick3", "36n+25Trick5",
    "a1inPhiPsi", "OddpartPhi1Phi3", "LastTrick", "ana1",
]


def _known(name):
    every = set(REGISTRY) | set(ALIASES)
    return any(i == name or i.startswith(name + ".") for i in every)


# -- manifest --------------------------------------------------------------------------


@pytest.mark.parametrize("name", PROOF_INTERNAL)
def test_manifest_proof_internal(name):
    assert _known("I." + name)


@pytest.mark.parametrize("prefix,count", [
    ("T1.1.", 3), ("T1.2.", 22), ("T1.3.", 17), ("T1.4.", 11), ("T1.5.", 23), ("T1.6.", 22),
])
def test_manifest_theorem_counts(prefix, count):
    assert len(list_ids(prefix)) == count


@pytest.mark.parametrize("lemma", [f"L2.{k}." for k in range(1, 10)])
def test_manifest_lemmas(lemma):
    assert list_ids(lemma)


def test_manifest_intro_and_conjectures():
    for i in ("I.alpha", "I.beta", "I.jacobi-quartic", "I.jacobi-cubed", "I.ana1"):
        assert i in REGISTRY
    assert list_ids("C8.1") == [f"C8.1.lambda{k}" for k in (11, 12, 13, 14)]
    assert list_ids("C8.2") == [f"C8.2.omega{p}" for p in (13, 17, 29, 53)]
    assert list_ids("C8.3") == [f"C8.3.omega{p}" for p in (21, 28, 77)]
    assert all(REGISTRY[i].kind == "conjecture" for i in list_ids("C8"))


def test_manifest_parametric():
    for i in ("T1.1.i", "T1.1.ii", "T1.1.iii", "PD.f1", "PD.psi", "PD.phi"):
        assert REGISTRY[i].kind == "parametric-identity"
    assert REGISTRY["T1.1.i"].params == (5, 7, 11, 13)
    assert REGISTRY["T1.1.ii"].params == (3, 5, 7, 11, 13)


def test_ids_and_aliases():
    assert len(set(REGISTRY)) == len(REGISTRY)
    assert not set(ALIASES) & set(REGISTRY)
    for alias, target in ALIASES.items():
        assert get_entry(alias).id == target
    assert get_entry("2.1.30a").id == "L2.1.3"
    with pytest.raises(UnknownId):
        get_entry("T9.9")


def test_every_entry_states_min_order():
    for e in REGISTRY.values():
        assert e.min_order(50) >= 1
        assert e.source and e.statement


def test_omega77_min_order():
    assert get_entry("C8.3.omega77").min_order(50) >= 77 * 50 + 76 - 77


# -- verify_entry ------------------------------------------------------------------------


def test_jacobi_quartic():
    assert verify_entry("I.jacobi-quartic", 500).status == "passed"


def test_T14_i():
    e = get_entry("T1.4.i")
    assert MatchRelation(1, 5, 3, -1, 5, 1) in e.relations
    assert MatchRelation(1, 5, 4, -1, 5, 2) in e.relations
    assert verify_entry("T1.4.i", 600).passed


def test_T11_i_p5():
    r = verify_entry("T1.1.i", 500, params=(5,))
    assert r.passed
    assert r.details[0]["label"].startswith("p=5: A(5n+1) = -B(1n+0)")
    A = _series("f(1)/f(5)", 10)
    assert A[1] == -1


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_T11_sign_dichotomy(p):
    # the reciprocal starts with 1, so the sign is the coefficient at (p^2-1)/24
    k = (p * p - 1) // 24
    assert gamma1_sign(p) == _series(f"f(1)/f({p})", k + 1)[k]


@pytest.mark.parametrize("p", [2, 3, 9])
def test_T11_sign_needs_prime_to_6(p):
    with pytest.raises(ArithmeticError):
        gamma1_sign(p)


def test_T11_thirteen_order():
    assert get_entry("T1.1.i").min_order(50) == 13 * 49 + 7 + 1
    r = verify_entry("T1.1.i", 13 * 50 + 7, params=(13,))
    assert r.passed and r.report.checked_count >= 50


def test_insufficient_order_propagates():
    with pytest.raises(InsufficientOrder):
        verify_entry("C8.3.omega77", 600)
    r = verify_entry("C8.3.omega77", 600, auto_raise=True)
    assert r.warnings and r.report.order_used >= 77 * 49 + 76


def test_params_rejected_for_relation_entries():
    with pytest.raises(ValueError):
        verify_entry("T1.2.iii", params=(5,))


def test_verify_all_T12():
    s = verify_all("T1.2", 600)
    assert len(s.entries) == 22 and s.passed
    assert [e.id for e in s.entries] == sorted(e.id for e in s.entries)


def test_verify_all_L2():
    s = verify_all("L2", 400)
    assert s.passed and len(s.entries) == len(list_ids("L2"))


def test_verify_all_jobs_deterministic():
    one = verify_all("T1.4", jobs=1).to_dict()
    two = verify_all("T1.4", jobs=2).to_dict()
    assert one == two


def test_conjecture_status_and_counterexample():
    assert verify_entry("C8.2.omega13").status == "verified to order"
    r = verify_entry("C8.3.omega28")
    assert r.status == "counterexample" and not r.passed
    failing = [d for d in r.details if not d["passed"] and d.get("counted", True)]
    assert failing[0]["first_failure_n"] == 1
    suggested = [d for d in r.details if d["label"].startswith("suggested")]
    assert suggested and all(d["passed"] for d in suggested)


# -- errata ---------------------------------------------------------------------------------


@pytest.mark.parametrize("i", ["T1.2.vi", "T1.3.vi", "T1.3.viii", "T1.5.vi", "T1.5.xxi"])
def test_theorem_errata(i):
    r = verify_entry(i)
    assert r.passed and r.erratum
    printed = [d for d in r.details if d["label"].startswith("printed")]
    assert printed and not any(d["passed"] for d in printed)



def test_identity_errata():
    with_printed = [e for e in REGISTRY.values() if e.printed_lhs or e.printed_rhs]
    assert len(with_printed) == 12
    for e in with_printed:
        r = verify_entry(e.id)
        assert r.passed and r.erratum
        assert any(not d["passed"] for d in r.details if d.get("counted") is False)


# -- twins -------------------------------------------------------------------------------


def test_twins_derived_and_optional():
    twins = list_ids("TW", include_derived=True)
    assert twins and not list_ids("TW")
    for i in twins:
        e = REGISTRY[i]
        assert e.derived and all(r.aA % 2 for r in e.relations)
    assert verify_all("TW", include_derived=True).passed


# -- theta lemma -------------------------------------------------------------------------


def test_theta_psi_two_dissection():
    assert verify_theta_lemma("2.1.29a", [((1, 1), (1, 3))], 200).passed


def test_theta_E6Trick2_specialization():
    assert verify_theta_lemma("2.1.30a", [((1, 1), (1, 9), (1, 3), (1, 7))], 200).passed


def test_theta_ab_cd_violation():
    with pytest.raises(ValueError):
        verify_theta_lemma("2.1.30a", [((1, 1), (1, 9), (1, 3), (1, 8))], 50)
    with pytest.raises(ValueError):
        verify_theta_lemma("2.1.29a", [((1, 0), (1, 3))], 50)
    with pytest.raises(ValueError):
        verify_theta_lemma("2.1.99", [((1, 1), (1, 3))], 50)


def test_theta_grids():
    assert len(default_grid("2.1.29a")) == 112
    for spec in default_grid("2.1.30b"):
        a, b, c, d = spec
        assert a[0] * b[0] == c[0] * d[0] and a[1] + b[1] == c[1] + d[1]


@pytest.mark.parametrize("alias", ["2.1.29a", "2.1.29b"])
def test_theta_lemma_full_grid(alias):
    rep = verify_theta_lemma(alias)
    assert rep.passed and rep.checked_count >= 112 * 150


# -- p-dissections ---------------------------------------------------------------------


@pytest.mark.parametrize("which,p", [("f1", 5), ("f1", 13), ("psi", 3), ("psi", 7), ("phi", 3), ("phi", 7)])
def test_p_dissection(which, p):
    rep = verify_p_dissection(which, p, 300)
    assert rep.passed and rep.checked_count == 300


@pytest.mark.parametrize("which,p", [("f1", 3), ("f1", 2), ("f1", 25), ("psi", 2), ("psi", 9), ("phi", 4), ("x", 5)])
def test_p_dissection_invalid(which, p):
    with pytest.raises(ValueError):
        verify_p_dissection(which, p, 50)


def test_side_conditions():
    assert psi_side_condition(3) and psi_side_condition(11)
    assert all(phi_side_condition(p) for p in (2, 3, 5, 7))


# -- catalog export -------------------------------------------------------------------------


def test_catalog_roundtrip():
    data = json.loads(export_catalog())
    assert {d["id"] for d in data} == set(REGISTRY)
    by_id = {d["id"]: d for d in data}
    for i, e in REGISTRY.items():
        d = by_id[i]
        assert d["kind"] == e.kind
        assert tuple(MatchRelation.from_dict(r) for r in d.get("relations", [])) == e.relations
    assert by_id["T1.2.iii"]["relations"] == [{"cA": 1, "aA": 5, "rA": 2, "cB": -1, "aB": 1, "rB": 0}]


def test_catalog_prefix_and_derived():
    assert [d["id"] for d in json.loads(export_catalog("T1.2"))] == list_ids("T1.2")
    assert not any(d.get("derived") for d in json.loads(export_catalog(include_derived=False)))


# -- scanner on ground truth -----------------------------------------------------------------


def _rediscovered(rel, A, B, found_ab, found_ba, vanishing):
    if any(f == rel or f.implies(rel) for f in found_ab):
        return True
    sw = rel.swapped()
    if any(f == sw or f.implies(sw) for f in found_ba):
        return True
    return (rel.aA, rel.rA, rel.aB, rel.rB) in vanishing


RELATION_IDS = [i for i in list_ids() if REGISTRY[i].kind == "relation-set"]


@pytest.mark.parametrize("i", RELATION_IDS)
def test_scan_rediscovers_registry(i):
    e = REGISTRY[i]
    top = max(r.aA for r in e.relations)
    N = max(e.min_order(50), 600)
    A = _series(e.expr, N)
    B = _reciprocal(e.expr_b or e.expr, N)
    found_ab = scan(A, B, top)
    for rel in found_ab:
        assert verify_relation(A, B, rel).passed
    found_ba = scan(B, A, max(r.aB for r in e.relations))
    vanishing = vanishing_progressions(A, B, top)
    for rel in e.relations:
        assert _rediscovered(rel, A, B, found_ab, found_ba, vanishing), str(rel)
