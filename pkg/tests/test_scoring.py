from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from multiwinner import profiles
from multiwinner.election import Election, ElectionError
from multiwinner.scoring import (
    F_BLOC,
    F_CC,
    F_KBORDA,
    F_SNTV,
    ScoreVector,
    ScoredRanking,
    SatisfactionFunction,
    approval,
    best_k_committees,
    borda,
    borda_satisfaction,
    committee_positions,
    committee_score,
    dominates,
    elect_committee_scoring,
    evaluate_separable_as_best_k,
    general,
    plurality,
    s_score,
    satisfaction_matrix,
)
from strategies import election_and_k


def test_standard_vectors():
    assert plurality(4).values == (1, 0, 0, 0)
    assert approval(4, 2).values == (1, 1, 0, 0)
    assert borda(4).values == (3, 2, 1, 0)
    assert borda(4)[1] == 3 and borda(4)[4] == 0
    with pytest.raises(ElectionError):
        borda(4)[5]
    with pytest.raises(ElectionError):
        ScoreVector((0, 1))
    with pytest.raises(ElectionError):
        ScoreVector((1.0, 0))
    assert ScoreVector((Fraction(3, 2), Fraction(2, 2))).values == (Fraction(3, 2), 1)


def test_plurality_scores_of_stv_profile():
    e = profiles.load("stv_committee_monotonicity")
    assert s_score(e, plurality(4)) == [11, 3, 4, 6]


def test_borda_scores_of_cc_profile(E):
    e = E("acbd", "bcad", "acdb", "bcda")
    assert s_score(e, borda(4)) == [7, 7, 8, 2]


def test_zero_vector_scores_nothing(E):
    assert s_score(E("abc", "cab"), (0, 0, 0)) == [0, 0, 0]


def test_committee_positions(E):
    e = E("acbd", "bcda")
    assert committee_positions(e.votes[0], (1, 3)) == (3, 4)
    assert committee_positions(e.votes[1], (0, 1)) == (1, 4)
    assert committee_positions(e.votes[0], (0, 1, 2, 3)) == (1, 2, 3, 4)


def test_cc_score_of_solid_coalition_profile():
    e = profiles.load("solid_coalitions_cc_monroe")
    assert committee_score(e, (0, 1, 2), F_CC) == 9 * 7 - 12


def test_cc_score_of_cc_profile(E):
    e = E("acbd", "bcad", "acdb", "bcda")
    assert committee_score(e, (0, 1), F_CC) == 12


def test_kborda_full_committee_single_vote(E):
    m = 5
    e = E("abcde")
    assert committee_score(e, tuple(range(m)), F_KBORDA) == sum(m - i for i in range(1, m + 1))


def test_scoring_function_domain():
    with pytest.raises(ElectionError):
        F_KBORDA((2, 1), 4)
    with pytest.raises(ElectionError):
        F_KBORDA((1, 5), 4)
    assert F_BLOC((1, 3), 4) == 1
    assert F_BLOC((1, 2), 4) == 2
    assert F_CC((2, 3), 4) == 2
    assert F_SNTV((1, 2), 4) == 1


def test_general_scoring_function():
    f = general("top-pair", lambda p, m: 1 if p[:2] == (1, 2) else 0)
    e = Election.from_strings(["abc", "abc", "cba"])
    assert elect_committee_scoring(e, 2, f).committees == ((0, 1),)


def test_best_k_boundary_ties():
    assert best_k_committees([3, 3, 4], 2).committees == ((0, 2), (1, 2))
    assert best_k_committees([1, 1, 1], 1).committees == ((0,), (1,), (2,))
    assert best_k_committees([5, 4, 3, 2], 3).committees == ((0, 1, 2),)
    assert best_k_committees(ScoredRanking.from_scores([0, 2, 1]), 1).value == 2


def test_sntv_via_best_k_on_stv_profile():
    e = profiles.load("stv_committee_monotonicity")
    assert evaluate_separable_as_best_k(e, plurality(4), 2).committees == ((0, 3),)


def test_kborda_on_consensus_profile():
    e = profiles.load("consensus_committee")
    out = evaluate_separable_as_best_k(e, borda(4), 2)
    assert out.committees == ((0, 2), (1, 2))


def test_k_equals_m_elects_everyone(E):
    e = E("abc", "cba")
    assert evaluate_separable_as_best_k(e, borda(3), 3).committees == ((0, 1, 2),)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6), st.data())
def test_best_k_equals_boundary_enumeration(scores, data):
    k = data.draw(st.integers(1, len(scores)))
    expected = [
        W
        for W in combinations(range(len(scores)), k)
        if min(scores[c] for c in W) >= max((scores[c] for c in range(len(scores)) if c not in W), default=-1)
    ]
    assert list(best_k_committees(scores, k).committees) == expected


@given(election_and_k(max_m=5, max_n=5))
def test_best_k_matches_brute_force_committee_argmax(ek):
    e, k = ek
    for vec, f in ((plurality(e.m), oracles.sntv_f), (borda(e.m), oracles.kborda_f)):
        winners, best = oracles.committee_scoring(e, k, f)
        out = evaluate_separable_as_best_k(e, vec, k)
        assert list(out.committees) == winners
        assert out.value == best


@given(election_and_k(max_m=4, max_n=4))
def test_elect_committee_scoring_matches_oracle(ek):
    e, k = ek
    for f, g in ((F_BLOC, oracles.bloc_f), (F_CC, oracles.cc_f), (F_KBORDA, oracles.kborda_f)):
        winners, best = oracles.committee_scoring(e, k, g)
        out = elect_committee_scoring(e, k, f)
        assert list(out.committees) == winners and out.value == best


@given(st.integers(2, 6), st.data())
def test_score_functions_respect_dominance(m, data):
    """If I dominates J then f(I) >= f(J)."""
    k = data.draw(st.integers(1, m))
    positions = list(combinations(range(1, m + 1), k))
    i = data.draw(st.sampled_from(positions))
    j = data.draw(st.sampled_from(positions))
    for f in (F_SNTV, F_BLOC, F_KBORDA, F_CC):
        if dominates(i, j):
            assert f(i, m) >= f(j, m)


def test_dominance():
    assert dominates((1, 3), (2, 3))
    assert not dominates((1, 4), (2, 3))
    assert not dominates((1,), (1, 2))


def test_satisfaction_functions(E):
    alpha = borda_satisfaction(4)
    assert [alpha(i) for i in range(1, 5)] == [3, 2, 1, 0]
    assert alpha.levels() == [3, 2, 1, 0]
    assert satisfaction_matrix(E("bca"), borda_satisfaction(3)) == [[0, 2, 1]]
    with pytest.raises(ElectionError):
        satisfaction_matrix(E("bca"), alpha)
    with pytest.raises(ElectionError):
        SatisfactionFunction((0, 1))
