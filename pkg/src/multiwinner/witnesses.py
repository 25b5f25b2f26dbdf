"""Catalogue of the shipped counterexample elections and the violations they exhibit."""

from __future__ import annotations

from dataclasses import dataclass

from . import axioms as ax
from . import profiles
from .election import Election


@dataclass(frozen=True)
class Witness:
    profile: str
    axiom: str
    k: int
    rules: tuple[str, ...]
    second: str | None = None  # second election of a consistency pair
    t: int = 2

    def elections(self) -> tuple[Election, Election | None]:
        e2 = profiles.load(self.second) if self.second else None
        return profiles.load(self.profile), e2

    def check(self, rule) -> ax.AxiomVerdict:
        e, e2 = self.elections()
        if self.axiom == ax.COMMITTEE_MONOTONICITY:
            return ax.check_committee_monotonicity(rule, e, [self.k])
        if self.axiom == ax.CONSISTENCY:
            return ax.check_consistency(rule, e, e2, self.k)
        if self.axiom == ax.HOMOGENEITY:
            return ax.check_homogeneity(rule, e, self.k, (self.t,))
        return ax.SINGLE_CHECKS[self.axiom](rule, e, self.k)

    def files(self) -> list[str]:
        names = [self.profile] + ([self.second] if self.second else [])
        return [str(profiles.path(n)) for n in names]


_CC = ("l1-cc", "lmin-cc")
_MONROE = ("l1-monroe", "lmin-monroe")

CATALOG = (
    Witness("stv_committee_monotonicity", ax.COMMITTEE_MONOTONICITY, 1, ("stv",)),
    Witness("bloc_committee_monotonicity", ax.COMMITTEE_MONOTONICITY, 1, ("bloc",)),
    Witness("cc_monroe_committee_monotonicity", ax.COMMITTEE_MONOTONICITY, 1, _CC + _MONROE + ("greedy-monroe",)),
    Witness("solid_coalitions_cc_monroe", ax.SOLID_COALITIONS, 3, _CC + _MONROE),
    Witness("consensus_committee", ax.SOLID_COALITIONS, 2, ("bloc", "k-borda", "greedy-cc")),
    Witness("consensus_committee", ax.CONSENSUS_COMMITTEE, 2, ("bloc", "k-borda", "greedy-cc")),
    Witness("stv_monotonicity", ax.CANDIDATE_MONOTONICITY, 1, ("stv",)),
    Witness("stv_monotonicity", ax.NONCROSSING_MONOTONICITY, 1, ("stv",)),
    Witness("cc_noncrossing", ax.NONCROSSING_MONOTONICITY, 2, ("l1-cc", "l1-monroe", "greedy-cc", "greedy-monroe")),
    Witness("lmin_noncrossing", ax.NONCROSSING_MONOTONICITY, 2, ("lmin-cc", "lmin-monroe")),
    Witness("monroe_candidate_monotonicity", ax.CANDIDATE_MONOTONICITY, 2, _MONROE),
    Witness("greedy_monroe_candidate_monotonicity", ax.CANDIDATE_MONOTONICITY, 2, ("greedy-monroe",)),
    Witness("greedy_cc_candidate_monotonicity", ax.CANDIDATE_MONOTONICITY, 2, ("greedy-cc",)),
    Witness("monroe_consistency_e1", ax.CONSISTENCY, 2, _MONROE, second="monroe_consistency_e2"),
    Witness("greedy_monroe_consistency_e1", ax.CONSISTENCY, 2, ("greedy-monroe",), second="greedy_monroe_consistency_e2"),
    Witness("greedy_cc_consistency_e1", ax.CONSISTENCY, 2, ("greedy-cc",), second="greedy_cc_consistency_e2"),
    Witness("monroe_homogeneity", ax.HOMOGENEITY, 2, _MONROE + ("greedy-monroe",)),
    Witness("greedy_monroe_homogeneity", ax.HOMOGENEITY, 2, ("greedy-monroe",)),
)


def for_cell(rule: str, axiom: str) -> list[Witness]:
    return [w for w in CATALOG if w.axiom == axiom and rule in w.rules]
