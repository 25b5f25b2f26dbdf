"""Instance-level checkers for the multiwinner axioms.

A checker takes a rule (any callable ``rule(election, k) -> RuleOutcome``
with a ``name``) and one instance. It returns ``holds`` when the axiom's
conclusion is met for that instance (including when its premise is vacuous)
and ``violated`` with a replayable witness otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .election import (
    BudgetExhausted,
    Committee,
    Election,
    ElectionError,
    RuleOutcome,
    check_k,
    concat,
    replicate,
    shift_forward,
)

HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"

NONIMPOSITION = "nonimposition"
CONSISTENCY = "consistency"
HOMOGENEITY = "homogeneity"
CANDIDATE_MONOTONICITY = "candidate-monotonicity"
NONCROSSING_MONOTONICITY = "non-crossing-monotonicity"
COMMITTEE_MONOTONICITY = "committee-monotonicity"
SOLID_COALITIONS = "solid-coalitions"
CONSENSUS_COMMITTEE = "consensus-committee"
WEAK_UNANIMITY = "weak-unanimity"
STRONG_UNANIMITY = "strong-unanimity"
FIXED_MAJORITY = "fixed-majority"

AXIOMS = (
    NONIMPOSITION,
    CONSISTENCY,
    HOMOGENEITY,
    CANDIDATE_MONOTONICITY,
    NONCROSSING_MONOTONICITY,
    COMMITTEE_MONOTONICITY,
    SOLID_COALITIONS,
    CONSENSUS_COMMITTEE,
    WEAK_UNANIMITY,
    STRONG_UNANIMITY,
    FIXED_MAJORITY,
)


@dataclass(frozen=True)
class Perturbation:
    """Candidate ``candidate`` moved up one position in vote ``voter`` of the first election."""

    voter: int
    candidate: int


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: str
    rule: str
    status: str
    k: int | None = None
    condition: str = ""
    # named elections making up the witness, e.g. ("E", e), ("E'", shifted)
    elections: tuple[tuple[str, Election], ...] = ()
    # named outcomes, e.g. ("R(E,k)", committees)
    outcomes: tuple[tuple[str, tuple[Committee, ...]], ...] = ()
    perturbation: Perturbation | None = None
    t: int | None = None
    note: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def violated(self) -> bool:
        return self.status == VIOLATED

    def election(self, name: str) -> Election:
        return dict(self.elections)[name]

    def record(self) -> dict:
        """JSON-ready description of the breach, with candidates shown by label."""
        labels = self.elections[0][1].labels if self.elections else None

        def show(c):
            return "{" + ",".join(labels[x] for x in c) + "}" if labels else list(c)

        rec = {"axiom": self.axiom, "rule": self.rule, "status": self.status, "k": self.k}
        if self.condition:
            rec["condition"] = self.condition
        if self.outcomes:
            rec["committees"] = {name: [show(c) for c in cs] for name, cs in self.outcomes}
        if self.perturbation is not None:
            p = self.perturbation
            rec["perturbation"] = {"voter": p.voter + 1, "candidate": labels[p.candidate]}
        if self.t is not None:
            rec["t"] = self.t
        if self.note:
            rec["note"] = self.note
        return rec


def _holds(axiom, rule, k=None, note="", **extra) -> AxiomVerdict:
    return AxiomVerdict(axiom, _name(rule), HOLDS, k, note=note, extra=extra)


def _name(rule) -> str:
    return getattr(rule, "name", getattr(rule, "__name__", str(rule)))


def _max_k(rule, e: Election) -> int:
    return rule.max_k(e) if hasattr(rule, "max_k") else e.m


def _violated(axiom, rule, k, condition, elections, outcomes, **kw) -> AxiomVerdict:
    outcomes = tuple((name, tuple(out.committees)) for name, out in outcomes)
    return AxiomVerdict(axiom, _name(rule), VIOLATED, k, condition, tuple(elections), outcomes, **kw)


# --- threshold premises ---------------------------------------------------------


def first_place_counts(e: Election) -> list[int]:
    counts = [0] * e.m
    for vote in e.votes:
        counts[vote[0]] += 1
    return counts


def solid_coalition_candidates(e: Election, k: int) -> list[int]:
    """Candidates ranked first by at least n/k voters."""
    return [c for c, x in enumerate(first_place_counts(e)) if Fraction(x) >= Fraction(e.n, k)]


def consensus_committee(e: Election, k: int) -> Committee | None:
    """The committee of all first-ranked candidates, when it is balanced and has size k."""
    counts = first_place_counts(e)
    firsts = [c for c, x in enumerate(counts) if x > 0]
    lo, hi = e.n // k, -(-e.n // k)
    if len(firsts) == k and all(lo <= counts[c] <= hi for c in firsts):
        return tuple(firsts)
    return None


def unanimous_top(e: Election, k: int) -> Committee | None:
    tops = {frozenset(v[:k]) for v in e.votes}
    return tuple(sorted(next(iter(tops)))) if len(tops) == 1 else None


def majority_top(e: Election, k: int) -> Committee | None:
    """The top-k set shared by a strict majority of voters, if any."""
    tops = Counter(tuple(sorted(v[:k])) for v in e.votes)
    W, count = tops.most_common(1)[0]
    return W if 2 * count > e.n else None


# --- checkers ---------------------------------------------------------------------


def check_committee_monotonicity(rule, e: Election, ks=None) -> AxiomVerdict:
    top = _max_k(rule, e)
    ks = range(1, top) if ks is None else ks
    for k in ks:
        if not 1 <= k < top:
            raise ElectionError(f"committee monotonicity needs 1 <= k <= m-1, got {k}")
        small, big = rule(e, k), rule(e, k + 1)
        big_sets = big.as_sets()
        for W in small:
            if not any(set(W) <= B for B in big_sets):
                return _violated(
                    COMMITTEE_MONOTONICITY, rule, k,
                    f"{e.label_of(W)} wins for k={k} but no winning committee for k={k + 1} contains it",
                    [("E", e)], [("R(E,k)", small), ("R(E,k+1)", big)],
                )
        small_sets = small.as_sets()
        for B in big:
            if not any(S <= set(B) for S in small_sets):
                return _violated(
                    COMMITTEE_MONOTONICITY, rule, k,
                    f"{e.label_of(B)} wins for k={k + 1} but contains no winning committee for k={k}",
                    [("E", e)], [("R(E,k)", small), ("R(E,k+1)", big)],
                )
    return _holds(COMMITTEE_MONOTONICITY, rule)


def check_solid_coalitions(rule, e: Election, k: int) -> AxiomVerdict:
    check_k(e, k)
    solid = solid_coalition_candidates(e, k)
    if not solid:
        return _holds(SOLID_COALITIONS, rule, k, note="vacuous")
    out = rule(e, k)
    for c in solid:
        for W in out:
            if c not in W:
                return _violated(
                    SOLID_COALITIONS, rule, k,
                    f"{e.labels[c]} is ranked first by at least n/k voters but {e.label_of(W)} wins",
                    [("E", e)], [("R(E,k)", out)],
                )
    return _holds(SOLID_COALITIONS, rule, k)


def _exact_outcome(axiom, rule, e, k, W, what):
    out = rule(e, k)
    if out.committees != (W,):
        return _violated(
            axiom, rule, k, f"{e.label_of(W)} is the {what} but the outcome differs",
            [("E", e)], [("R(E,k)", out)],
        )
    return _holds(axiom, rule, k)


def check_consensus_committee(rule, e: Election, k: int) -> AxiomVerdict:
    check_k(e, k)
    W = consensus_committee(e, k)
    if W is None:
        return _holds(CONSENSUS_COMMITTEE, rule, k, note="vacuous")
    return _exact_outcome(CONSENSUS_COMMITTEE, rule, e, k, W, "consensus committee")


def check_unanimity(rule, e: Election, k: int, strength: str = "weak") -> AxiomVerdict:
    check_k(e, k)
    if strength not in ("weak", "strong"):
        raise ElectionError(f"unanimity strength must be weak or strong, got {strength!r}")
    axiom = WEAK_UNANIMITY if strength == "weak" else STRONG_UNANIMITY
    W = unanimous_top(e, k)
    if W is None:
        return _holds(axiom, rule, k, note="vacuous")
    if strength == "strong":
        return _exact_outcome(axiom, rule, e, k, W, "top-k set of every voter")
    out = rule(e, k)
    if W not in out:
        return _violated(
            axiom, rule, k, f"every voter ranks {e.label_of(W)} on top but it does not win",
            [("E", e)], [("R(E,k)", out)],
        )
    return _holds(axiom, rule, k)


def check_fixed_majority(rule, e: Election, k: int) -> AxiomVerdict:
    check_k(e, k)
    W = majority_top(e, k)
    if W is None:
        return _holds(FIXED_MAJORITY, rule, k, note="vacuous")
    return _exact_outcome(FIXED_MAJORITY, rule, e, k, W, "top-k set of a strict majority")


def _shifts(e: Election, c: int):
    for v, vote in enumerate(e.votes):
        if vote[0] != c:
            yield v


def check_candidate_monotonicity(rule, e: Election, k: int) -> AxiomVerdict:
    check_k(e, k)
    out = rule(e, k)
    members = sorted({c for W in out for c in W})
    for c in members:
        for v in _shifts(e, c):
            shifted = shift_forward(e, v, c)
            after = rule(shifted, k)
            if not any(c in W for W in after):
                return _violated(
                    CANDIDATE_MONOTONICITY, rule, k,
                    f"{e.labels[c]} wins before being shifted up in vote {v + 1} and loses after",
                    [("E", e), ("E'", shifted)], [("R(E,k)", out), ("R(E',k)", after)],
                    perturbation=Perturbation(v, c),
                )
    return _holds(CANDIDATE_MONOTONICITY, rule, k)


def check_noncrossing_monotonicity(rule, e: Election, k: int) -> AxiomVerdict:
    check_k(e, k)
    out = rule(e, k)
    for W in out:
        for c in W:
            for v in _shifts(e, c):
                vote = e.votes[v]
                above = vote[vote.index(c) - 1]
                if above in W:
                    continue
                shifted = shift_forward(e, v, c)
                after = rule(shifted, k)
                if W not in after:
                    return _violated(
                        NONCROSSING_MONOTONICITY, rule, k,
                        f"{e.label_of(W)} stops winning when {e.labels[c]} passes "
                        f"{e.labels[above]} in vote {v + 1}",
                        [("E", e), ("E'", shifted)], [("R(E,k)", out), ("R(E',k)", after)],
                        perturbation=Perturbation(v, c),
                    )
    return _holds(NONCROSSING_MONOTONICITY, rule, k)


def check_consistency(rule, e1: Election, e2: Election, k: int) -> AxiomVerdict:
    check_k(e1, k)
    joint = concat(e1, e2)
    a, b = rule(e1, k), rule(e2, k)
    common = sorted(set(a.committees) & set(b.committees))
    if not common:
        return _holds(CONSISTENCY, rule, k, note="vacuous")
    out = rule(joint, k)
    if list(out.committees) != common:
        return _violated(
            CONSISTENCY, rule, k,
            "R(E1+E2,k) differs from the committees winning both E1 and E2",
            [("E1", e1), ("E2", e2), ("E1+E2", joint)],
            [("R(E1,k)", a), ("R(E2,k)", b), ("R(E1+E2,k)", out)],
        )
    return _holds(CONSISTENCY, rule, k)


def check_homogeneity(rule, e: Election, k: int, ts=(2,)) -> AxiomVerdict:
    check_k(e, k)
    out = rule(e, k)
    for t in ts:
        if t < 2:
            raise ElectionError(f"homogeneity replication factor must be at least 2, got {t}")
        copies = replicate(e, t)
        after = rule(copies, k)
        if after.committees != out.committees:
            return _violated(
                HOMOGENEITY, rule, k, f"replicating every vote {t} times changes the outcome",
                [("E", e), (f"{t}E", copies)], [("R(E,k)", out), (f"R({t}E,k)", after)], t=t,
            )
    return _holds(HOMOGENEITY, rule, k)


def check_nonimposition(rule, m: int, k: int, max_voters: int = 4, budget: int = 100_000) -> AxiomVerdict:
    """Search for an election in which the first k candidates form the unique winning committee.

    Every shipped rule is neutral, so one target committee stands for all of them.
    Profiles are tried in order of size; the unanimous profile comes first.
    """
    labels = tuple(chr(ord("a") + i) if m <= 26 else f"c{i}" for i in range(m))
    target = tuple(range(k))
    orders = list(permutations(range(m)))
    tried = 0
    for n in range(1, max_voters + 1):
        if getattr(rule, "name", "") in ("l1-monroe", "lmin-monroe", "greedy-monroe") and k > n:
            continue
        for combo in combinations_with_replacement(range(len(orders)), n):
            tried += 1
            if tried > budget:
                return AxiomVerdict(NONIMPOSITION, _name(rule), INCONCLUSIVE, k, note="budget exhausted")
            e = Election(labels, tuple(orders[i] for i in combo))
            try:
                out = rule(e, k)
            except BudgetExhausted:
                continue
            if out.committees == (target,):
                return AxiomVerdict(
                    NONIMPOSITION, _name(rule), HOLDS, k,
                    elections=(("E", e),), outcomes=(("R(E,k)", out.committees),),
                )
    return AxiomVerdict(NONIMPOSITION, _name(rule), INCONCLUSIVE, k, note="no witness within bounds")


def replay(rule, verdict: AxiomVerdict) -> bool:
    """Re-run the rule on a violation witness and confirm that the recorded outcomes recur."""
    if not verdict.violated:
        return False
    elections = dict(verdict.elections)
    k = verdict.k
    got: dict[str, tuple] = {}
    for name, _ in verdict.outcomes:
        inner = name[2:-1]  # "R(E',k)" -> "E',k"
        ename, _, kk = inner.rpartition(",")
        size = k + 1 if kk == "k+1" else k
        got[name] = rule(elections[ename], size).committees
    return got == dict(verdict.outcomes)


# Dispatch table for single-election checks; keyed by axiom tag.
SINGLE_CHECKS = {
    SOLID_COALITIONS: check_solid_coalitions,
    CONSENSUS_COMMITTEE: check_consensus_committee,
    WEAK_UNANIMITY: lambda rule, e, k: check_unanimity(rule, e, k, "weak"),
    STRONG_UNANIMITY: lambda rule, e, k: check_unanimity(rule, e, k, "strong"),
    FIXED_MAJORITY: check_fixed_majority,
    CANDIDATE_MONOTONICITY: check_candidate_monotonicity,
    NONCROSSING_MONOTONICITY: check_noncrossing_monotonicity,
}


def check(rule, axiom: str, e: Election, k: int | None = None, e2: Election | None = None, ts=(2,)) -> AxiomVerdict:
    """Run one axiom on one instance; ``k=None`` means every k the axiom allows."""
    if axiom not in AXIOMS:
        raise ElectionError(f"unknown axiom {axiom!r}")
    if axiom == NONIMPOSITION:
        return check_nonimposition(rule, e.m, k or 1)
    if axiom == COMMITTEE_MONOTONICITY:
        return check_committee_monotonicity(rule, e, None if k is None else [k])
    ks = range(1, _max_k(rule, e) + 1) if k is None else [k]
    verdict = None
    for kk in ks:
        if axiom == CONSISTENCY:
            if e2 is None:
                raise ElectionError("consistency needs a second election")
            verdict = check_consistency(rule, e, e2, kk)
        elif axiom == HOMOGENEITY:
            verdict = check_homogeneity(rule, e, kk, ts)
        else:
            verdict = SINGLE_CHECKS[axiom](rule, e, kk)
        if verdict.violated:
            return verdict
    return verdict
