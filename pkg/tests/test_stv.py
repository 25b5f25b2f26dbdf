import pytest
from hypothesis import given

import oracles
from multiwinner import profiles
from multiwinner.election import BudgetExhausted, ElectionError
from multiwinner.stv import LEXICOGRAPHIC, PUT, StvConfig, droop_quota, elect_stv
from strategies import election_and_k


def test_droop_quota():
    assert droop_quota(24, 1) == 13
    assert droop_quota(24, 2) == 9
    assert droop_quota(1, 1) == 1


def test_committee_monotonicity_profile():
    e = profiles.load("stv_committee_monotonicity")
    assert elect_stv(e, 1).labelled(e) == ["{c}"]
    assert elect_stv(e, 2).labelled(e) == ["{a,d}"]
    assert elect_stv(e, 2, StvConfig(tie_mode=LEXICOGRAPHIC)).labelled(e) == ["{a,d}"]


def test_unanimous_profile(E):
    e = E("bac", "bca", "bac")
    assert elect_stv(e, 1).labelled(e) == ["{b}"]


def test_search_derived_monotonicity_profile():
    e = profiles.load("stv_monotonicity")
    assert elect_stv(e, 1).labelled(e) == ["{a}", "{b}"]


def test_remaining_quota_basis_is_selectable(E):
    e = E("abc", "abc", "bca", "cab")
    out = elect_stv(e, 2, StvConfig(quota_basis="remaining"))
    assert all(len(W) == 2 for W in out)


def test_config_validation():
    with pytest.raises(ElectionError):
        StvConfig(tie_mode="random")
    with pytest.raises(ElectionError):
        StvConfig(universe_cap=0)
    with pytest.raises(ElectionError):
        StvConfig(quota_basis="hare")


def test_budget_exhaustion_carries_partial_results(E):
    e = E("abcd", "bcda", "cdab", "dabc")
    with pytest.raises(BudgetExhausted) as err:
        elect_stv(e, 2, StvConfig(universe_cap=1))
    assert "budget exhausted" in str(err.value)
    assert isinstance(err.value.partial, tuple)


@given(election_and_k(max_m=4, max_n=5))
def test_put_matches_voter_level_oracle(ek):
    e, k = ek
    assert list(elect_stv(e, k).committees) == oracles.stv(e, k)


@given(election_and_k(max_m=4, max_n=6))
def test_lexicographic_outcome_is_a_put_outcome(ek):
    e, k = ek
    lex = elect_stv(e, k, StvConfig(tie_mode=LEXICOGRAPHIC))
    assert len(lex.committees) == 1
    assert lex.committees[0] in elect_stv(e, k, StvConfig(tie_mode=PUT))
