"""Bounded counterexample search over small elections.

Exhaustive mode walks anonymous profiles (multisets of the m! rankings) in a
fixed canonical order: by number of candidates, then number of voters, then
the sorted tuple of ranking indices, then k. Since every shipped rule and
every axiom is neutral, it can optionally keep only one profile per
relabelling class (the lexicographically smallest one).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from typing import Callable, Iterator

from . import axioms as ax
from .election import BudgetExhausted, Election, ElectionError

EXHAUSTIVE = "exhaustive-anonymous"
RANDOM = "random"
MODES = (EXHAUSTIVE, RANDOM)


@dataclass(frozen=True)
class SearchBounds:
    max_candidates: int = 4
    max_voters: int = 5
    max_k: int | None = None  # None: every valid k
    mode: str = EXHAUSTIVE
    seed: int = 0
    budget: int = 1000  # elections sampled in random mode
    min_candidates: int = 1
    max_t: int = 3  # largest replication factor tried for homogeneity
    neutral: bool = True  # keep one profile per relabelling class

    def __post_init__(self):
        if self.mode not in MODES:
            raise ElectionError(f"unknown search mode {self.mode!r}")
        for name in ("max_candidates", "max_voters", "budget", "min_candidates"):
            if getattr(self, name) < 1:
                raise ElectionError(f"{name} must be at least 1")
        if self.max_k is not None and self.max_k < 1:
            raise ElectionError("max_k must be at least 1")
        if self.max_t < 2:
            raise ElectionError("max_t must be at least 2")
        if self.min_candidates > self.max_candidates:
            raise ElectionError("min_candidates exceeds max_candidates")


def labels_for(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"c{i}" for i in range(m))


@lru_cache(maxsize=None)
def orders(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(m)))


@lru_cache(maxsize=None)
def _relabel_table(m: int) -> tuple[tuple[int, ...], ...]:
    """For every candidate permutation, how it maps ranking indices."""
    index = {o: i for i, o in enumerate(orders(m))}
    return tuple(
        tuple(index[tuple(perm[c] for c in o)] for o in orders(m)) for perm in permutations(range(m))
    )


def canonical(m: int, profile: tuple[int, ...]) -> tuple[int, ...]:
    """Smallest sorted index tuple among all relabellings of the profile."""
    return min(tuple(sorted(t[i] for i in profile)) for t in _relabel_table(m))


@lru_cache(maxsize=None)
def anonymous_profiles(m: int, n: int, neutral: bool = False) -> tuple[tuple[int, ...], ...]:
    """Sorted tuples of ranking indices, one per anonymous profile (or relabelling class)."""
    combos = combinations_with_replacement(range(len(orders(m))), n)
    if not neutral:
        return tuple(combos)
    table = _relabel_table(m)
    keep = []
    for p in combos:
        if all(tuple(sorted(t[i] for i in p)) >= p for t in table):
            keep.append(p)
    return tuple(keep)


def to_election(m: int, profile: tuple[int, ...]) -> Election:
    os = orders(m)
    return Election(labels_for(m), tuple(os[i] for i in profile))


def universe(bounds: SearchBounds) -> Iterator[Election]:
    for m in range(bounds.min_candidates, bounds.max_candidates + 1):
        for n in range(1, bounds.max_voters + 1):
            for p in anonymous_profiles(m, n, bounds.neutral):
                yield to_election(m, p)


def impartial_culture(m: int, n: int, rng: random.Random) -> Election:
    """Every vote drawn uniformly from the m! rankings."""
    return Election(labels_for(m), tuple(tuple(rng.sample(range(m), m)) for _ in range(n)))


def _max_k(rule, e: Election, bounds: SearchBounds) -> int:
    top = rule.max_k(e) if hasattr(rule, "max_k") else e.m
    return top if bounds.max_k is None else min(top, bounds.max_k)


Guard = Callable[[Election, int], bool]


def _instances(rule, axiom: str, bounds: SearchBounds, guard: Guard | None):
    """Yield zero-argument thunks, each running the checker on one instance."""
    ts = tuple(range(2, bounds.max_t + 1))
    ok = guard or (lambda e, k: True)

    def for_election(e):
        if axiom == ax.COMMITTEE_MONOTONICITY:
            top = rule.max_k(e) if hasattr(rule, "max_k") else e.m
            for k in range(1, top):
                if (bounds.max_k is None or k <= bounds.max_k) and ok(e, k):
                    yield lambda e=e, k=k: ax.check_committee_monotonicity(rule, e, [k])
            return
        for k in range(1, _max_k(rule, e, bounds) + 1):
            if not ok(e, k):
                continue
            if axiom == ax.HOMOGENEITY:
                yield lambda e=e, k=k: ax.check_homogeneity(rule, e, k, ts)
            else:
                check = ax.SINGLE_CHECKS[axiom]
                yield lambda e=e, k=k: check(rule, e, k)

    if axiom == ax.CONSISTENCY:
        yield from _consistency_instances(rule, bounds, ok)
        return
    if bounds.mode == RANDOM:
        rng = random.Random(bounds.seed)
        for _ in range(bounds.budget):
            m = rng.randint(bounds.min_candidates, bounds.max_candidates)
            n = rng.randint(1, bounds.max_voters)
            yield from for_election(impartial_culture(m, n, rng))
        return
    for e in universe(bounds):
        yield from for_election(e)


def _consistency_instances(rule, bounds: SearchBounds, ok: Guard):
    """Pairs of elections over the same roster with at most ``max_voters`` voters in total.

    Consistency is symmetric for anonymous rules, so in exhaustive mode the
    smaller election comes first and, under the neutral reduction, is the
    canonical member of its relabelling class.
    """

    def pair(e1, e2):
        joint = Election(e1.labels, e1.votes + e2.votes)
        for k in range(1, _max_k(rule, joint, bounds) + 1):
            if k <= min(_max_k(rule, e1, bounds), _max_k(rule, e2, bounds)) and ok(joint, k):
                yield lambda k=k: ax.check_consistency(rule, e1, e2, k)

    if bounds.mode == RANDOM:
        rng = random.Random(bounds.seed)
        for _ in range(bounds.budget):
            m = rng.randint(bounds.min_candidates, bounds.max_candidates)
            total = rng.randint(2, max(2, bounds.max_voters))
            n1 = rng.randint(1, total - 1)
            yield from pair(impartial_culture(m, n1, rng), impartial_culture(m, total - n1, rng))
        return
    for m in range(bounds.min_candidates, bounds.max_candidates + 1):
        for n1 in range(1, bounds.max_voters // 2 + 1):
            for p1 in anonymous_profiles(m, n1, bounds.neutral):
                e1 = to_election(m, p1)
                for n2 in range(n1, bounds.max_voters - n1 + 1):
                    for p2 in anonymous_profiles(m, n2, False):
                        yield from pair(e1, to_election(m, p2))


def search_counterexample(rule, axiom: str, bounds: SearchBounds | None = None, guard: Guard | None = None) -> ax.AxiomVerdict:
    """First violation in canonical order, or ``inconclusive`` once the bounded universe is exhausted."""
    bounds = bounds or SearchBounds()
    if axiom not in ax.AXIOMS:
        raise ElectionError(f"unknown axiom {axiom!r}")
    name = getattr(rule, "name", str(rule))
    if axiom == ax.NONIMPOSITION:
        return _search_nonimposition(rule, bounds)
    checked = 0
    budget_errors = []
    for thunk in _instances(rule, axiom, bounds, guard):
        try:
            verdict = thunk()
        except BudgetExhausted as exc:
            budget_errors.append(str(exc))
            continue
        checked += 1
        if verdict.violated:
            return verdict
    note = f"no violation in {checked} instances"
    if budget_errors:
        note += f"; {len(budget_errors)} instances hit the tie-breaking budget"
    return ax.AxiomVerdict(axiom, name, ax.INCONCLUSIVE, note=note, extra={"checked": checked, "budget_errors": len(budget_errors)})


def _search_nonimposition(rule, bounds: SearchBounds) -> ax.AxiomVerdict:
    name = getattr(rule, "name", str(rule))
    for m in range(bounds.min_candidates, bounds.max_candidates + 1):
        top = m if bounds.max_k is None else min(m, bounds.max_k)
        for k in range(1, top + 1):
            v = ax.check_nonimposition(rule, m, k, max_voters=bounds.max_voters)
            if v.status != ax.HOLDS:
                return v
    return ax.AxiomVerdict(ax.NONIMPOSITION, name, ax.HOLDS, note="every committee size has a witness")
