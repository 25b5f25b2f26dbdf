from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiwinner.election import (
    Election,
    ElectionError,
    ParseError,
    RuleOutcome,
    bounded_splits,
    concat,
    parse_election,
    position,
    replicate,
    serialize_election,
    shift_forward,
)
from strategies import elections


def test_positions_are_one_based(E):
    e = E("bca", "abc")
    assert e.positions[0] == (3, 1, 2)
    assert e.positions[1] == (1, 2, 3)
    assert position(e.votes[0], 1) == 1


def test_rejects_bad_votes():
    with pytest.raises(ElectionError):
        Election(("a", "b"), ((0, 0),))
    with pytest.raises(ElectionError):
        Election(("a", "b"), ((0,),))
    with pytest.raises(ElectionError):
        Election(("a", "b"), ())
    with pytest.raises(ElectionError):
        Election(("a", "a"), ((0, 1),))
    with pytest.raises(ElectionError):
        Election.from_strings(["abc"], labels="abd")


def test_committees_are_lexicographic(E):
    assert E("abc").committees(2) == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(ElectionError):
        E("abc").committees(4)
    with pytest.raises(ElectionError):
        E("abc").committees(0)


def test_concat_and_replicate(E):
    e1, e2 = E("ab"), E("ba", "ab")
    assert concat(e1, e2).votes == ((0, 1), (1, 0), (0, 1))
    assert replicate(e2, 3).n == 6
    with pytest.raises(ElectionError):
        replicate(e1, 0)
    with pytest.raises(ElectionError):
        concat(e1, E("abc"))


def test_shift_forward_swaps_with_predecessor(E):
    e = E("dacb", "abcd")
    s = shift_forward(e, 0, 2)
    assert s.votes[0] == (3, 2, 0, 1)
    assert s.votes[1] == e.votes[1]
    with pytest.raises(ElectionError):
        shift_forward(e, 1, 0)


def test_anonymous_key_ignores_voter_order(E):
    assert E("ab", "ba").anonymous_key == E("ba", "ab").anonymous_key
    assert E("ab", "ba").anonymized() == Counter({(0, 1): 1, (1, 0): 1})


def test_parse_with_multiplicities_and_comments():
    text = """
    # the 24-voter profile
    candidates: a,b,c,d
    11 * vote: a > b > c > d
    3*vote: b>c>a>d
    """
    e = parse_election(text)
    assert e.n == 14
    assert e.votes[-1] == (1, 2, 0, 3)


def test_inline_comments_are_not_part_of_the_format():
    with pytest.raises(ParseError) as err:
        parse_election("candidates: a,b\nvote: a > b  # note\n")
    assert err.value.line == 2


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("candidates: a,b\nvote: a > c\n", 2, "unknown candidate"),
        ("candidates: a,b\nvote: a > a\n", 2, "twice"),
        ("candidates: a,b,c\nvote: a > b\n", 2, "does not rank c"),
        ("candidates: a,b\ncandidates: a,b\n", 2, "duplicate candidates"),
        ("candidates: a,a\n", 1, "duplicate candidate"),
        ("vote: a > b\n", 1, "before candidates"),
        ("candidates: a,b\nballot: a > b\n", 2, "unrecognised"),
        ("candidates: a,b\n0 * vote: a > b\n", 2, "positive"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as err:
        parse_election(text)
    assert err.value.line == line
    assert fragment in str(err.value)
    assert str(err.value).startswith(f"line {line}:")


def test_parse_errors_without_line():
    with pytest.raises(ParseError, match="missing candidates"):
        parse_election("# nothing\n")
    with pytest.raises(ParseError, match="no votes"):
        parse_election("candidates: a,b\n")


@given(elections(max_m=6, max_n=6))
def test_serialize_round_trip(e):
    assert parse_election(serialize_election(e, ["comment"])) == e


def test_rule_outcome_is_canonical():
    out = RuleOutcome(((2, 0), (0, 1), (0, 2)))
    assert out.committees == ((0, 1), (0, 2))
    assert (2, 0) in out and (1, 2) not in out
    assert out.unique is None
    assert RuleOutcome(((1, 0),)).unique == (0, 1)
    with pytest.raises(ElectionError):
        RuleOutcome(())
    with pytest.raises(ElectionError):
        RuleOutcome(((0,), (0, 1)))


def test_labelled_outcome(E):
    e = E("abc")
    assert RuleOutcome(((2, 0),)).labelled(e) == ["{a,c}"]


@given(st.lists(st.integers(0, 3), max_size=4), st.integers(0, 8))
def test_bounded_splits_matches_brute_force(counts, total):
    from itertools import product

    expected = [d for d in product(*(range(c + 1) for c in counts)) if sum(d) == total]
    assert sorted(bounded_splits(counts, total)) == sorted(expected)
