"""Exact winner determination for the score-based and assignment-based rules.

Every rule returns all tied committees (parallel-universes tie-breaking).
Chamberlin--Courant and Monroe enumerate every k-subset, so they are meant for
small elections.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .assignment import L1, LMIN, aggregate, capacity_window, monroe_optimal_assignment
from .election import Committee, Election, ElectionError, RuleOutcome, check_k
from .scoring import (
    SatisfactionFunction,
    approval,
    best_k_committees,
    borda,
    borda_satisfaction,
    plurality,
    satisfaction_matrix,
    s_score,
)


def elect_sntv(e: Election, k: int) -> RuleOutcome:
    check_k(e, k)
    return best_k_committees(s_score(e, plurality(e.m)), k)


def elect_bloc(e: Election, k: int) -> RuleOutcome:
    check_k(e, k)
    return best_k_committees(s_score(e, approval(e.m, k)), k)


def elect_kborda(e: Election, k: int) -> RuleOutcome:
    check_k(e, k)
    return best_k_committees(s_score(e, borda(e.m)), k)


def _argmax(committees, values) -> RuleOutcome:
    best = max(values)
    return RuleOutcome(tuple(c for c, x in zip(committees, values) if x == best), best)


def elect_cc_exact(
    e: Election, k: int, alpha: SatisfactionFunction | None = None, mode: str = L1
) -> RuleOutcome:
    """Chamberlin--Courant: every voter is represented by their favourite member.

    Committees whose optimal assignment uses fewer than k members are covered
    by the enumeration itself, since each of their completions scores the same.
    """
    check_k(e, k)
    alpha = alpha or borda_satisfaction(e.m)
    sat = satisfaction_matrix(e, alpha)
    committees = list(combinations(range(e.m), k))
    dtype = np.int64 if all(isinstance(x, int) for x in alpha.values) else object
    table = np.array(sat, dtype=dtype)
    best_rep = table[:, np.array(committees)].max(axis=2)
    if mode == L1:
        values = best_rep.sum(axis=0)
    elif mode == LMIN:
        values = best_rep.min(axis=0)
    else:
        raise ElectionError(f"unknown aggregation mode {mode!r}")
    return _argmax(committees, [x.item() if hasattr(x, "item") else x for x in values])


def monroe_value(e: Election, committee: Committee, alpha=None, mode: str = L1, sat=None):
    alpha = alpha or borda_satisfaction(e.m)
    return monroe_optimal_assignment(e, committee, alpha, mode, sat=sat)[1]


def elect_monroe_exact(
    e: Election, k: int, alpha: SatisfactionFunction | None = None, mode: str = L1
) -> RuleOutcome:
    check_k(e, k)
    capacity_window(e.n, k)
    alpha = alpha or borda_satisfaction(e.m)
    sat = satisfaction_matrix(e, alpha)
    committees = list(combinations(range(e.m), k))
    values = [monroe_optimal_assignment(e, c, alpha, mode, sat=sat)[1] for c in committees]
    return _argmax(committees, values)

