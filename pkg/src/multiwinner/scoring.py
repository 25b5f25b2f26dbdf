"""Positional scores, committee scoring functions and best-k committee extraction.

All arithmetic is exact: values are ints or :class:`fractions.Fraction`, never
floats, because ties have to be detected exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Callable, Sequence

from .election import Committee, Election, ElectionError, RuleOutcome, check_k


def _exact(x):
    if isinstance(x, bool) or not isinstance(x, Rational):
        raise ElectionError(f"score values must be ints or Fractions, got {x!r}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _nonincreasing(values, what):
    for a, b in zip(values, values[1:]):
        if a < b:
            raise ElectionError(f"{what} must be non-increasing, got {list(values)}")
    if values and values[-1] < 0:
        raise ElectionError(f"{what} must be nonnegative")


@dataclass(frozen=True)
class ScoreVector:
    """Single-winner scoring vector ``(s_1, ..., s_m)``; ``s[i]`` is the score of position i."""

    values: tuple

    def __post_init__(self):
        values = tuple(_exact(x) for x in self.values)
        _nonincreasing(values, "a score vector")
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, position: int):
        if not 1 <= position <= len(self.values):
            raise ElectionError(f"position {position} outside 1..{len(self.values)}")
        return self.values[position - 1]


def plurality(m: int) -> ScoreVector:
    return ScoreVector((1,) + (0,) * (m - 1))


def approval(m: int, t: int) -> ScoreVector:
    if not 0 <= t <= m:
        raise ElectionError(f"t-approval needs 0 <= t <= m, got t={t}, m={m}")
    return ScoreVector((1,) * t + (0,) * (m - t))


def borda(m: int) -> ScoreVector:
    return ScoreVector(tuple(range(m - 1, -1, -1)))


@dataclass(frozen=True)
class SatisfactionFunction:
    """Non-increasing satisfaction ``alpha(i)`` a voter derives from a representative at position i."""

    values: tuple
    kind: str = "custom"

    def __post_init__(self):
        values = tuple(_exact(x) for x in self.values)
        _nonincreasing(values, "a satisfaction function")
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return len(self.values)

    def __call__(self, position: int):
        return self.values[position - 1]

    def levels(self) -> list:
        """Distinct values in decreasing order."""
        return sorted(set(self.values), reverse=True)


def borda_satisfaction(m: int) -> SatisfactionFunction:
    return SatisfactionFunction(tuple(m - i for i in range(1, m + 1)), kind="borda")


def approval_satisfaction(m: int, t: int) -> SatisfactionFunction:
    return SatisfactionFunction(approval(m, t).values, kind=f"{t}-approval")


def satisfaction_matrix(e: Election, alpha: SatisfactionFunction) -> list[list]:
    """``sat[v][c] = alpha(pos_v(c))``."""
    if alpha.m != e.m:
        raise ElectionError(f"satisfaction function is for m={alpha.m}, election has m={e.m}")
    vals = alpha.values
    return [[vals[p - 1] for p in row] for row in e.positions]


# --- single-winner scores ---------------------------------------------------


def s_score(e: Election, s: ScoreVector | Sequence) -> list:
    """Per-candidate s-score: the sum over voters of ``s[pos_v(c)]``."""
    if not isinstance(s, ScoreVector):
        s = ScoreVector(tuple(s))
    if len(s) != e.m:
        raise ElectionError(f"score vector has length {len(s)}, election has {e.m} candidates")
    scores = [0] * e.m
    vals = s.values
    for vote in e.votes:
        for i, c in enumerate(vote):
            scores[c] += vals[i]
    return scores


@dataclass(frozen=True)
class ScoredRanking:
    """Candidates grouped into tie classes of equal score, best class first."""

    scores: tuple
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def from_scores(cls, scores: Sequence) -> ScoredRanking:
        by_value: dict = {}
        for c, x in enumerate(scores):
            by_value.setdefault(x, []).append(c)
        classes = tuple(tuple(by_value[x]) for x in sorted(by_value, reverse=True))
        return cls(tuple(scores), classes)


def best_k_committees(ranking: ScoredRanking | Sequence, k: int) -> RuleOutcome:
    """Every k-set whose lowest score is at least the highest score left outside.

    This is the set of top-k prefixes over all tie-broken linear extensions of
    the ranking.
    """
    if not isinstance(ranking, ScoredRanking):
        ranking = ScoredRanking.from_scores(ranking)
    m = len(ranking.scores)
    if not 1 <= k <= m:
        raise ElectionError(f"committee size k={k} outside 1..{m}")
    fixed: list[int] = []
    for cls in ranking.classes:
        if len(fixed) + len(cls) <= k:
            fixed.extend(cls)
            if len(fixed) == k:
                committees = [tuple(fixed)]
                break
        else:
            need = k - len(fixed)
            committees = [tuple(fixed) + extra for extra in combinations(cls, need)]
            break
    value = sum(ranking.scores[c] for c in committees[0])
    return RuleOutcome(tuple(committees), value)


# --- committee scoring functions --------------------------------------------

SEPARABLE = "separable"
WEAKLY_SEPARABLE = "weakly-separable"
REPRESENTATION_FOCUSED = "representation-focused"
GENERAL = "general"


class CommitteeScoringFunction:
    """A committee scoring function ``f(i_1 < ... < i_k)`` for every ``m`` and ``k``.

    ``vector(m, k)`` gives the per-position vector for the decomposable kinds:
    separable functions ignore ``k``; weakly separable ones may use it;
    representation-focused ones only look at the best position ``i_1``.
    General functions are given directly as ``fn(positions, m)``.
    """

    def __init__(self, name: str, structure: str, vector: Callable | None = None, fn: Callable | None = None):
        if structure == GENERAL:
            if fn is None:
                raise ElectionError("a general committee scoring function needs fn")
        elif vector is None:
            raise ElectionError(f"a {structure} committee scoring function needs a vector family")
        self.name = name
        self.structure = structure
        self._vector = vector
        self._fn = fn

    def __repr__(self):
        return f"CommitteeScoringFunction({self.name!r}, {self.structure!r})"

    def vector(self, m: int, k: int) -> ScoreVector:
        if self._vector is None:
            raise ElectionError(f"{self.name} has no per-position vector")
        s = self._vector(m) if self.structure in (SEPARABLE, REPRESENTATION_FOCUSED) else self._vector(m, k)
        s = s if isinstance(s, ScoreVector) else ScoreVector(tuple(s))
        if len(s) != m:
            raise ElectionError(f"{self.name} is not defined for m={m}")
        return s

    def __call__(self, positions: Sequence[int], m: int):
        positions = tuple(positions)
        k = len(positions)
        if not 1 <= k <= m or any(not 1 <= p <= m for p in positions):
            raise ElectionError(f"{self.name} is not defined for positions {positions} with m={m}")
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ElectionError("committee positions must be strictly increasing")
        if self.structure == GENERAL:
            return _exact(self._fn(positions, m))
        s = self.vector(m, k)
        if self.structure == REPRESENTATION_FOCUSED:
            return s[positions[0]]
        return sum(s[p] for p in positions)


def separable(name: str, gamma: Callable[[int], ScoreVector | Sequence]) -> CommitteeScoringFunction:
    return CommitteeScoringFunction(name, SEPARABLE, vector=gamma)


def weakly_separable(name: str, family: Callable[[int, int], ScoreVector | Sequence]) -> CommitteeScoringFunction:
    return CommitteeScoringFunction(name, WEAKLY_SEPARABLE, vector=family)


def representation_focused(name: str, gamma: Callable[[int], ScoreVector | Sequence]) -> CommitteeScoringFunction:
    return CommitteeScoringFunction(name, REPRESENTATION_FOCUSED, vector=gamma)


def general(name: str, fn: Callable[[tuple, int], object]) -> CommitteeScoringFunction:
    return CommitteeScoringFunction(name, GENERAL, fn=fn)


F_SNTV = separable("sntv", plurality)
F_BLOC = weakly_separable("bloc", approval)
F_KBORDA = separable("k-borda", borda)
F_CC = representation_focused("cc", borda)


def committee_positions(vote: Sequence[int], committee: Committee) -> tuple[int, ...]:
    members = set(committee)
    return tuple(i for i, c in enumerate(vote, start=1) if c in members)


def committee_score(e: Election, committee: Committee, f: CommitteeScoringFunction):
    committee = tuple(committee)
    if len(set(committee)) != len(committee) or any(not 0 <= c < e.m for c in committee):
        raise ElectionError(f"invalid committee {committee}")
    return sum(f(committee_positions(vote, committee), e.m) for vote in e.votes)


def elect_committee_scoring(e: Election, k: int, f: CommitteeScoringFunction) -> RuleOutcome:
    """Brute-force argmax of the committee score over all k-subsets."""
    best = None
    winners: list[Committee] = []
    for committee in e.committees(k):
        x = committee_score(e, committee, f)
        if best is None or x > best:
            best, winners = x, [committee]
        elif x == best:
            winners.append(committee)
    return RuleOutcome(tuple(winners), best)


def evaluate_separable_as_best_k(e: Election, s: ScoreVector | Sequence, k: int) -> RuleOutcome:
    """Winners of the separable rule with ``gamma(i) = s_i``, via the best-k shortcut."""
    check_k(e, k)
    return best_k_committees(s_score(e, s), k)


def dominates(i: Sequence[int], j: Sequence[int]) -> bool:
    """``I >= J``: every coordinate of I is at most the matching coordinate of J."""
    return len(i) == len(j) and all(a <= b for a, b in zip(i, j))
