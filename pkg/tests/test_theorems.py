import pytest

from superkappa import (
    InputError,
    check_hypotheses,
    complete,
    complete_bipartite,
    cycle,
    direct_product,
    predicted,
    replay_witness,
    verify,
    verify_decomposition,
)
from superkappa.theorems import CONFIRMED, HYP_NOT_MET, hypotheses_hold


def clause_map(clauses):
    return {c.text: c.holds for c in clauses}


def test_hypotheses_l22_part_size_fails(k23):
    clauses = check_hypotheses("L2.2", k23, n=3)
    cm = clause_map(clauses)
    assert cm["|X| >= delta+1 (2 vs 3)"] is False
    assert not hypotheses_hold(clauses)


def test_hypotheses_l22_c6(c6):
    assert hypotheses_hold(check_hypotheses("L2.2", c6, n=3))


def test_hypotheses_t37_c5():
    clauses = check_hypotheses("T3.7", cycle(5), n=6)
    assert hypotheses_hold(clauses)
    # boundary: the strict inequality clause is exact rational comparison
    bad = check_hypotheses("T3.7", cycle(5), n=4)
    assert not hypotheses_hold(bad)


def test_hypotheses_unknown_theorem(c6):
    with pytest.raises(InputError):
        check_hypotheses("T9.9", c6, n=3)


def test_predicted_values(k23):
    assert predicted("T2.1", k23, n=3) == 4
    claim = predicted("T3.2", k23, n=4)
    assert claim["components"] == 2 and claim["component_kappa"] == 4
    prod = direct_product(cycle(3), cycle(5))
    assert predicted("T3.9", prod, odd_cycle_lengths=[3, 5]) == 4


def test_predicted_refuses_unmet_hypotheses(k23):
    with pytest.raises(InputError):
        predicted("L2.2", k23, n=3)


def test_verify_t21(k23):
    v = verify("T2.1", k23, n=3)
    assert v.verdict == CONFIRMED and v.predicted == 4 and v.actual == 4


def test_verify_t31(k23):
    v = verify("T3.1", k23, n=3)
    assert v.verdict == CONFIRMED and v.actual == 4


def test_verify_t32(k23):
    v = verify("T3.2", k23, n=4)
    assert v.verdict == CONFIRMED
    assert v.actual["components"] == 2 and v.actual["isomorphic"]


def test_verify_t33():
    v = verify("T3.3", cycle(5), n=4)
    assert v.verdict == CONFIRMED


def test_verify_t34_interval():
    v = verify("T3.4", cycle(5), n=5)
    lo, hi = v.predicted
    assert v.verdict == CONFIRMED and lo <= v.actual <= hi


def test_verify_l22_hypotheses_not_met(k23):
    v = verify("L2.2", k23, n=3)
    assert v.verdict == HYP_NOT_MET


def test_verify_l22_confirmed(c6):
    v = verify("L2.2", c6, n=3)
    assert v.verdict == CONFIRMED


def test_verify_t39():
    v = verify("T3.9", cycle(3), odd_cycle_lengths=[3])
    assert v.verdict == CONFIRMED and v.predicted == 2
    prod = direct_product(cycle(3), cycle(5))
    v = verify("T3.9", prod, odd_cycle_lengths=[3, 5])
    assert v.verdict == CONFIRMED and v.actual == 4


def test_verify_corollaries():
    v = verify("C3.10", cycle(3), n=6, odd_cycle_lengths=[3])
    assert v.verdict == CONFIRMED
    v = verify("C3.11", cycle(3), n=7, odd_cycle_lengths=[3])
    assert v.verdict == CONFIRMED
    assert any("T3.8" in note for note in v.notes)


def test_verify_t36():
    v = verify("T3.6", cycle(6), n=6)
    assert v.verdict == CONFIRMED
    assert v.actual["super_kappa"] == [True, True]


def test_verdict_serializes(k23):
    doc = verify("T2.1", k23, n=2).to_json()
    assert doc["verdict"] == CONFIRMED and doc["theorem_id"] == "T2.1"


def test_indeterminate_on_tiny_budget(c6):
    v = verify("T3.5", cycle(6), n=3, budget=1)
    assert v.verdict == "indeterminate"


def test_witness_replays():
    from superkappa import is_super_kappa
    from superkappa.theorems import _witness_from_cut

    res = is_super_kappa(cycle(8))
    assert res.status is False
    witness = _witness_from_cut(cycle(8), res.witness)
    assert replay_witness(witness)


@pytest.mark.parametrize(
    "base,n",
    [("kbip23", 3), ("kbip23", 4), ("c5", 6), ("c5", 7)],
)
def test_verify_decomposition(base, n):
    G = {"kbip23": complete_bipartite(2, 3), "c5": cycle(5)}[base]
    v = verify_decomposition(G, n)
    assert v.verdict == CONFIRMED
    assert v.actual["reassembly"] and v.actual["blocks_match_base"]
    if base == "kbip23" and n == 3:
        assert v.actual["tilde_edge_identity"]


def test_verify_decomposition_complete_base():
    v = verify_decomposition(complete(4), 6)
    assert v.verdict == CONFIRMED
