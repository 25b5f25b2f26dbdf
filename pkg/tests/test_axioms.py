import json

import pytest
from hypothesis import given

from multiwinner import axioms as ax
from multiwinner import profiles
from multiwinner.election import ElectionError, shift_forward
from multiwinner.registry import RULE_NAMES, get_rule
from multiwinner.witnesses import CATALOG, for_cell
from strategies import election_and_k, elections

SCORING = ("sntv", "bloc", "k-borda", "l1-cc")


def rule(name):
    return get_rule(name)


def test_stv_committee_monotonicity_violated():
    e = profiles.load("stv_committee_monotonicity")
    v = ax.check_committee_monotonicity(rule("stv"), e, [1])
    assert v.violated
    assert v.record()["committees"] == {"R(E,k)": ["{c}"], "R(E,k+1)": ["{a,d}"]}
    assert ax.replay(rule("stv"), v)


def test_sntv_committee_monotone_on_witnesses():
    for name in profiles.names():
        e = profiles.load(name)
        assert ax.check_committee_monotonicity(rule("sntv"), e).status == ax.HOLDS


def test_l1_cc_committee_monotonicity_violated():
    e = profiles.load("cc_monroe_committee_monotonicity")
    v = ax.check_committee_monotonicity(rule("l1-cc"), e)
    assert v.violated and v.k == 1


def test_solid_coalitions():
    e = profiles.load("solid_coalitions_cc_monroe")
    assert ax.solid_coalition_candidates(e, 3) == [3]
    v = ax.check_solid_coalitions(rule("l1-cc"), e, 3)
    assert v.violated and "d is ranked first" in v.condition
    assert ax.check_solid_coalitions(rule("greedy-monroe"), e, 3).status == ax.HOLDS


def test_solid_coalitions_vacuous(E):
    v = ax.check_solid_coalitions(rule("l1-cc"), E("abc", "bca", "cab"), 2)
    assert v.status == ax.HOLDS and v.note == "vacuous"


def test_consensus_committee():
    e = profiles.load("consensus_committee")
    assert ax.consensus_committee(e, 2) == (0, 1)
    assert ax.check_consensus_committee(rule("k-borda"), e, 2).violated
    assert ax.check_consensus_committee(rule("l1-monroe"), e, 2).status == ax.HOLDS
    assert ax.check_consensus_committee(rule("l1-monroe"), e, 1).note == "vacuous"


def test_consensus_needs_balanced_first_places(E):
    assert ax.consensus_committee(E("abc", "abc", "abc", "bca"), 2) is None
    assert ax.consensus_committee(E("abc", "abc", "bca"), 2) == (0, 1)


def test_unanimity(E):
    e = E("abcd", "abcd", "abcd")
    assert ax.check_unanimity(rule("sntv"), e, 2, "weak").status == ax.HOLDS
    assert ax.check_unanimity(rule("sntv"), e, 2, "strong").violated
    e = E("abcd", "abcd", "abcd", "bacd", "bacd", "bacd")
    assert ax.check_unanimity(rule("stv"), e, 2, "strong").status == ax.HOLDS
    assert ax.check_unanimity(rule("sntv"), E("abc", "bca"), 1).note == "vacuous"
    with pytest.raises(ElectionError):
        ax.check_unanimity(rule("sntv"), e, 2, "medium")


def test_fixed_majority(E):
    e = E("abcd", "bacd", "abdc", "cdab", "dcba")
    assert ax.majority_top(e, 2) == (0, 1)
    v = ax.check_fixed_majority(rule("bloc"), e, 2)
    assert v.status == ax.HOLDS
    assert rule("bloc")(e, 2).committees == ((0, 1),)
    assert ax.check_fixed_majority(rule("k-borda"), E("abc", "abc", "bca"), 1).violated
    assert ax.check_fixed_majority(rule("bloc"), E("abc", "bca", "cab"), 1).note == "vacuous"


def test_cc_noncrossing_shift_in_first_vote():
    e = profiles.load("cc_noncrossing")
    r = rule("l1-cc")
    a, c = e.labels.index("a"), e.labels.index("c")
    before = r(e, 2)
    assert before.labelled(e) == ["{a,b}", "{a,c}", "{b,c}"]
    after = r(shift_forward(e, 0, c), 2)
    assert (a, c) not in after
    assert after.labelled(e) == ["{b,c}"]
    assert after.value == 6 * e.m - 10
    assert ax.check_noncrossing_monotonicity(r, e, 2).violated


def test_lmin_monroe_candidate_monotonicity():
    e = profiles.load("monroe_candidate_monotonicity")
    r = rule("lmin-monroe")
    a = e.labels.index("a")
    after = r(shift_forward(e, 3, a), 2)
    assert all(a not in W for W in after)
    v = ax.check_candidate_monotonicity(r, e, 2)
    assert v.violated and ax.replay(r, v)
    assert v.record()["perturbation"]["voter"] >= 1


def test_monroe_consistency_and_homogeneity():
    e1, e2 = profiles.load("monroe_consistency_e1"), profiles.load("monroe_consistency_e2")
    v = ax.check_consistency(rule("l1-monroe"), e1, e2, 2)
    assert v.violated
    assert v.record()["committees"]["R(E1,k)"] == ["{a,c}"]
    assert v.record()["committees"]["R(E1+E2,k)"] == ["{a,b}"]
    e = profiles.load("monroe_homogeneity")
    v = ax.check_homogeneity(rule("l1-monroe"), e, 2, (2,))
    assert v.violated and v.t == 2 and v.election("2E").n == 6
    json.dumps(v.record())


def test_homogeneity_rejects_t_below_two(E):
    with pytest.raises(ElectionError):
        ax.check_homogeneity(rule("sntv"), E("ab"), 1, (1,))


def test_nonimposition():
    assert ax.check_nonimposition(rule("k-borda"), 3, 2).status == ax.HOLDS
    v = ax.check_nonimposition(rule("sntv"), 3, 2)
    assert v.status == ax.HOLDS
    assert rule("sntv")(v.election("E"), 2).committees == ((0, 1),)
    assert ax.check_nonimposition(rule("bloc"), 4, 2).status == ax.HOLDS


@pytest.mark.parametrize("w", CATALOG, ids=lambda w: f"{w.profile}-{w.axiom}")
def test_every_shipped_witness_replays(w):
    for name in w.rules:
        v = w.check(rule(name))
        assert v.violated, (name, w.profile)
        assert ax.replay(rule(name), v)


def test_for_cell():
    assert [w.profile for w in for_cell("stv", ax.COMMITTEE_MONOTONICITY)] == ["stv_committee_monotonicity"]
    assert for_cell("sntv", ax.CONSISTENCY) == []


def test_check_dispatch(E):
    e = profiles.load("consensus_committee")
    assert ax.check(rule("k-borda"), ax.CONSENSUS_COMMITTEE, e).violated
    assert ax.check(rule("sntv"), ax.NONIMPOSITION, e, 2).status == ax.HOLDS
    with pytest.raises(ElectionError):
        ax.check(rule("sntv"), "pareto", e)
    with pytest.raises(ElectionError):
        ax.check(rule("sntv"), ax.CONSISTENCY, e, 1)


def test_replay_ignores_non_violations(E):
    v = ax.check_unanimity(rule("sntv"), E("ab"), 1)
    assert not ax.replay(rule("sntv"), v)


@given(election_and_k(max_m=4, max_n=4))
def test_scoring_rules_candidate_monotone(ek):
    e, k = ek
    for name in SCORING:
        assert not ax.check_candidate_monotonicity(rule(name), e, k).violated


@given(election_and_k(max_m=4, max_n=4))
def test_weakly_separable_rules_noncrossing(ek):
    e, k = ek
    for name in ("sntv", "bloc", "k-borda"):
        assert not ax.check_noncrossing_monotonicity(rule(name), e, k).violated


@given(elections(max_m=4, max_n=3), elections(max_m=4, max_n=3))
def test_scoring_rules_consistent(e1, e2):
    if e1.labels != e2.labels:
        return
    for name in SCORING:
        for k in range(1, e1.m + 1):
            assert not ax.check_consistency(rule(name), e1, e2, k).violated


@given(election_and_k(max_m=4, max_n=5))
def test_all_rules_weakly_unanimous(ek):
    e, k = ek
    for name in RULE_NAMES:
        if k <= rule(name).max_k(e):
            assert not ax.check_unanimity(rule(name), e, k, "weak").violated
