"""Greedy-CC and Greedy-Monroe, the greedy approximations treated as rules.

Both rules add one candidate per iteration. Greedy-CC adds the candidate that
most increases the utilitarian Chamberlin--Courant satisfaction. Greedy-Monroe
also picks a group of still-unassigned voters for the new member: ``ceil(n/k)``
voters in the first ``n mod k`` iterations and ``n // k`` afterwards, chosen
together with the candidate to maximise the candidate's Borda score within the
group.

Deterministic mode breaks ties by lowest candidate id and then lowest voter
index. Parallel-universes mode follows every tied choice; identical residual
states are merged, so the search is over committees (Greedy-CC) or over
committee plus multiset of unassigned rankings (Greedy-Monroe).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .election import BudgetExhausted, Committee, Election, ElectionError, RuleOutcome, bounded_splits, check_k
from .scoring import SatisfactionFunction, borda_satisfaction, satisfaction_matrix
from .stv import LEXICOGRAPHIC, PUT, TIE_MODES

DETERMINISTIC = LEXICOGRAPHIC


@dataclass(frozen=True)
class GreedyStep:
    candidate: int
    committee: Committee
    voters: tuple[int, ...] | None = None  # voters newly assigned to the candidate (Monroe only)
    group_size: int | None = None
    value: object = None  # l1 satisfaction accumulated so far


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]

    @property
    def committee(self) -> Committee:
        return self.steps[-1].committee if self.steps else ()

    @property
    def value(self):
        return self.steps[-1].value if self.steps else 0

    @property
    def candidates(self) -> tuple[int, ...]:
        return tuple(s.candidate for s in self.steps)


def _check_mode(tie_mode):
    if tie_mode not in TIE_MODES:
        raise ElectionError(f"unknown tie mode {tie_mode!r}")


def monroe_schedule(n: int, k: int) -> list[int]:
    """Group sizes: the ceiling for the first ``n mod k`` iterations, then the floor."""
    if not 1 <= k <= n:
        raise ElectionError(f"Greedy-Monroe needs 1 <= k <= n, got k={k}, n={n}")
    lo, r = divmod(n, k)
    return [lo + 1] * r + [lo] * (k - r)


# --- Greedy-CC ---------------------------------------------------------------


def greedy_cc(
    e: Election,
    k: int,
    tie_mode: str = DETERMINISTIC,
    universe_cap: int = 10**6,
    alpha: SatisfactionFunction | None = None,
) -> tuple[RuleOutcome, list[GreedyTrace]]:
    check_k(e, k)
    _check_mode(tie_mode)
    sat = satisfaction_matrix(e, alpha or borda_satisfaction(e.m))

    def best_rep(W):
        # satisfaction values are nonnegative, so 0 is a safe floor for the empty committee
        return [max((row[c] for c in W), default=0) for row in sat]

    def extensions(W):
        cur = best_rep(W)
        gains = {}
        for c in range(e.m):
            if c not in W:
                gains[c] = sum(max(x, row[c]) for x, row in zip(cur, sat))
        top = max(gains.values())
        return [(c, top) for c in sorted(gains) if gains[c] == top]

    level = {frozenset(): None}
    parents: dict = {}
    expanded = 0
    for _ in range(k):
        nxt: dict = {}
        for W in level:
            expanded += 1
            if expanded > universe_cap:
                raise BudgetExhausted(
                    f"Greedy-CC tie-breaking budget exhausted after {universe_cap} branches",
                    (tuple(sorted(x)) for x in level if len(x) == k),
                )
            choices = extensions(W)
            if tie_mode == DETERMINISTIC:
                choices = choices[:1]
            for c, value in choices:
                W2 = W | {c}
                if W2 not in nxt:
                    nxt[W2] = None
                    parents[W2] = (W, c, value)
        level = nxt

    traces = []
    for W in sorted(level, key=lambda s: tuple(sorted(s))):
        steps = []
        cur = W
        while cur:
            prev, c, value = parents[cur]
            steps.append(GreedyStep(c, tuple(sorted(cur)), value=value))
            cur = prev
        traces.append(GreedyTrace(tuple(reversed(steps))))
    return RuleOutcome(tuple(t.committee for t in traces)), traces


# --- Greedy-Monroe -----------------------------------------------------------


def greedy_monroe(
    e: Election,
    k: int,
    tie_mode: str = DETERMINISTIC,
    universe_cap: int = 10**6,
    alpha: SatisfactionFunction | None = None,
) -> tuple[RuleOutcome, list[GreedyTrace]]:
    check_k(e, k)
    _check_mode(tie_mode)
    schedule = monroe_schedule(e.n, k)
    alpha = alpha or borda_satisfaction(e.m)
    if tie_mode == DETERMINISTIC:
        trace = _greedy_monroe_deterministic(e, k, schedule, alpha)
        return RuleOutcome((trace.committee,)), [trace]

    vals = alpha.values
    pos = {v: row for v, row in zip(e.votes, e.positions)}

    def moves(W, pool):
        size = schedule[len(W)]
        best = None
        options = []
        for c in range(e.m):
            if c in W:
                continue
            scored = sorted(((vals[pos[r][c] - 1], r) for r in pool), reverse=True)
            left, total = size, 0
            for x, r in scored:
                take = min(left, pool[r])
                total += take * x
                left -= take
                if not left:
                    break
            if best is None or total > best:
                best, options = total, [(c, scored)]
            elif total == best:
                options.append((c, scored))
        out = []
        for c, scored in options:
            # voters strictly above the cut-off value are forced; ties at the cut-off branch
            ranked = [x for x, r in scored for _ in range(pool[r])]
            cut = ranked[size - 1]
            forced = {r: pool[r] for x, r in scored if x > cut}
            tied = [r for x, r in scored if x == cut]
            need = size - sum(forced.values())
            for split in bounded_splits([pool[r] for r in tied], need):
                group = Counter(forced)
                for r, d in zip(tied, split):
                    if d:
                        group[r] += d
                out.append((c, group, best))
        return out

    start = (frozenset(), tuple(sorted(Counter(e.votes).items())))
    level = {start: None}
    parents: dict = {}
    expanded = 0
    for _ in range(k):
        nxt: dict = {}
        for state in level:
            expanded += 1
            if expanded > universe_cap:
                raise BudgetExhausted(
                    f"Greedy-Monroe tie-breaking budget exhausted after {universe_cap} branches",
                    (tuple(sorted(W)) for W, _ in level if len(W) == k),
                )
            W, items = state
            pool = Counter(dict(items))
            for c, group, gain in moves(W, pool):
                left = +(pool - group)
                child = (W | {c}, tuple(sorted(left.items())))
                if child not in nxt:
                    nxt[child] = None
                    parents[child] = (state, c, group, gain)
        level = nxt

    by_committee: dict = {}
    for state in level:
        by_committee.setdefault(tuple(sorted(state[0])), state)
    traces = [_monroe_trace(e, parents, by_committee[W], schedule) for W in sorted(by_committee)]
    return RuleOutcome(tuple(by_committee)), traces


def _monroe_trace(e, parents, state, schedule) -> GreedyTrace:
    path = []
    while state in parents:
        prev, c, group, gain = parents[state]
        path.append((c, group, gain))
        state = prev
    path.reverse()
    free = list(range(e.n))
    steps = []
    W: list[int] = []
    value = 0
    for i, (c, group, gain) in enumerate(path):
        need = Counter(group)
        chosen = []
        for v in free:
            if need[e.votes[v]] > 0:
                need[e.votes[v]] -= 1
                chosen.append(v)
        free = [v for v in free if v not in chosen]
        W.append(c)
        value += gain
        steps.append(GreedyStep(c, tuple(sorted(W)), tuple(chosen), schedule[i], value))
    return GreedyTrace(tuple(steps))


def _greedy_monroe_deterministic(e, k, schedule, alpha) -> GreedyTrace:
    sat = satisfaction_matrix(e, alpha)
    free = list(range(e.n))
    W: list[int] = []
    steps = []
    value = 0
    for size in schedule:
        best = None
        for c in range(e.m):
            if c in W:
                continue
            group = sorted(free, key=lambda v: (-sat[v][c], v))[:size]
            total = sum(sat[v][c] for v in group)
            if best is None or total > best[0]:
                best = (total, c, group)
        total, c, group = best
        W.append(c)
        free = [v for v in free if v not in group]
        value += total
        steps.append(GreedyStep(c, tuple(sorted(W)), tuple(sorted(group)), size, value))
    return GreedyTrace(tuple(steps))


# --- approximation guarantees ------------------------------------------------

CC_BOUND = 1 - 1 / math.e


def harmonic(k: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


def monroe_bound(k: int, m: int) -> Fraction:
    """Guaranteed fraction of the optimal l1-Monroe satisfaction reached by Greedy-Monroe."""
    return 1 - Fraction(k, 2 * m - 1) - harmonic(k) / k


@dataclass(frozen=True)
class ApproximationReport:
    rule: str
    greedy_value: object
    exact_value: object
    ratio: Fraction | None  # None when the optimum is 0
    bound: object
    passed: bool
    skipped: bool = False  # bound is negative, so there is nothing to check


def check_approximation(e: Election, k: int, rule: str = "greedy-cc", tie_mode: str = DETERMINISTIC) -> ApproximationReport:
    """Compare the l1 satisfaction reached greedily with the exact optimum.

    In parallel-universes mode the worst of all greedy traces is reported.
    """
    from .rules import elect_cc_exact, elect_monroe_exact

    if rule == "greedy-cc":
        traces = greedy_cc(e, k, tie_mode)[1]
        exact = elect_cc_exact(e, k).value
        bound = CC_BOUND
    elif rule == "greedy-monroe":
        traces = greedy_monroe(e, k, tie_mode)[1]
        exact = elect_monroe_exact(e, k).value
        bound = monroe_bound(k, e.m)
    else:
        raise ElectionError(f"no approximation guarantee known for {rule!r}")
    value = min(t.value for t in traces)
    ratio = Fraction(value) / Fraction(exact) if exact else None
    if bound < 0:
        return ApproximationReport(rule, value, exact, ratio, bound, True, skipped=True)
    passed = ratio is None or ratio >= bound
    return ApproximationReport(rule, value, exact, ratio, bound, passed)
