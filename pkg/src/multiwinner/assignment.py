"""Voter-to-representative assignments under the Monroe capacity window.

Every member of a committee of size k must represent between ``n // k`` and
``ceil(n / k)`` voters. The utilitarian optimum is a transportation problem
with lower bounds; we reduce it to a rectangular assignment problem by giving
each member ``n // k`` mandatory seats plus one optional seat when ``k`` does
not divide ``n``, and pricing mandatory seats so that every one of them is
filled. The egalitarian optimum scans the satisfaction levels from the top
and stops at the first level whose threshold graph admits a feasible
assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np
from scipy.optimize import linear_sum_assignment

from .election import Committee, Election, ElectionError
from .scoring import SatisfactionFunction, satisfaction_matrix

L1 = "l1"
LMIN = "lmin"
MODES = (L1, LMIN)


@dataclass(frozen=True)
class Assignment:
    rep: tuple[int, ...]  # rep[v] is the representative of voter v

    @property
    def committee(self) -> frozenset:
        return frozenset(self.rep)

    def load(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.rep:
            counts[c] = counts.get(c, 0) + 1
        return counts


def aggregate(values, mode: str):
    if mode == L1:
        return sum(values)
    if mode == LMIN:
        return min(values)
    raise ElectionError(f"unknown aggregation mode {mode!r}")


def assignment_value(e: Election, a: Assignment, alpha: SatisfactionFunction, mode: str):
    return aggregate([alpha(e.positions[v][c]) for v, c in enumerate(a.rep)], mode)


def capacity_window(n: int, k: int) -> tuple[int, int]:
    if not 1 <= k <= n:
        raise ElectionError(f"Monroe assignment needs 1 <= k <= n, got k={k}, n={n}")
    return n // k, -(-n // k)


def is_monroe_feasible(a: Assignment, committee: Committee) -> bool:
    n, k = len(a.rep), len(committee)
    lo, hi = capacity_window(n, k)
    load = a.load()
    if set(load) - set(committee):
        return False
    return all(lo <= load.get(c, 0) <= hi for c in committee)


def _integer_weights(sat):
    """Scale a rational satisfaction table to integers (exact for float64 below 2**53)."""
    flat = [x for row in sat for x in row]
    if all(isinstance(x, int) for x in flat):
        return np.array(sat, dtype=np.int64), 1
    scale = lcm(*(Fraction(x).denominator for x in flat))
    return np.array([[int(x * scale) for x in row] for row in sat], dtype=np.int64), scale


def _slots(committee: Committee, n: int):
    """Seat layout: (owner, mandatory) per seat."""
    lo, hi = capacity_window(n, len(committee))
    owners, mandatory = [], []
    for c in committee:
        owners.extend([c] * hi)
        mandatory.extend([True] * lo + [False] * (hi - lo))
    return np.array(owners), np.array(mandatory)


def monroe_optimal_assignment(
    e: Election, committee: Committee, alpha: SatisfactionFunction, mode: str = L1, sat=None
) -> tuple[Assignment, object]:
    """Best assignment of all voters to ``committee`` within the Monroe window.

    Returns one optimal assignment and its l1 (sum) or lmin (minimum)
    satisfaction. ``sat`` may carry a precomputed :func:`satisfaction_matrix`.
    """
    committee = tuple(sorted(committee))
    if len(set(committee)) != len(committee) or any(not 0 <= c < e.m for c in committee):
        raise ElectionError(f"invalid committee {committee}")
    if sat is None:
        sat = satisfaction_matrix(e, alpha)
    owners, mandatory = _slots(committee, e.n)
    n_mandatory = int(mandatory.sum())
    if mode == L1:
        table, _ = _integer_weights(sat)
        weights = table[:, owners]
        bonus = int(weights.sum()) * 2 + 1
        cols = _solve(weights + bonus * mandatory[None, :])
        assert int(mandatory[cols].sum()) == n_mandatory
    elif mode == LMIN:
        seat_sat = [[row[c] for c in owners] for row in sat]
        for level in alpha.levels():
            allowed = np.array([[x >= level for x in row] for row in seat_sat], dtype=np.int64)
            # allowed edges dominate; among those, prefer filling mandatory seats
            cols = _solve(allowed * (n_mandatory + 1 + mandatory[None, :]))
            if allowed[np.arange(e.n), cols].all() and int(mandatory[cols].sum()) == n_mandatory:
                break
        else:
            raise AssertionError("the lowest satisfaction level always admits an assignment")
    else:
        raise ElectionError(f"unknown aggregation mode {mode!r}")
    a = Assignment(tuple(int(owners[j]) for j in cols))
    return a, aggregate([sat[v][c] for v, c in enumerate(a.rep)], mode)


def _solve(weights: np.ndarray) -> np.ndarray:
    """Column chosen for each row in a max-weight assignment."""
    rows, cols = linear_sum_assignment(weights, maximize=True)
    return cols[np.argsort(rows)]


def naive_monroe_assignment(
    e: Election, committee: Committee, alpha: SatisfactionFunction, mode: str = L1
) -> tuple[Assignment | None, object]:
    """Exhaustive search over all capacity-feasible assignments (test oracle)."""
    committee = tuple(sorted(committee))
    lo, hi = capacity_window(e.n, len(committee))
    best, best_a = None, None
    for rep in product(committee, repeat=e.n):
        counts = [rep.count(c) for c in committee]
        if not all(lo <= x <= hi for x in counts):
            continue
        a = Assignment(rep)
        x = assignment_value(e, a, alpha, mode)
        if best is None or x > best:
            best, best_a = x, a
    return best_a, best


def cc_assignment(e: Election, committee: Committee) -> Assignment:
    """Each voter is represented by their favourite committee member."""
    members = set(committee)
    return Assignment(tuple(next(c for c in vote if c in members) for vote in e.votes))


def cc_value(e: Election, committee: Committee, alpha: SatisfactionFunction, mode: str = L1):
    sat = satisfaction_matrix(e, alpha)
    return aggregate([max(row[c] for c in committee) for row in sat], mode)
