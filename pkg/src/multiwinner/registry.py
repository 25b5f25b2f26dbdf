"""Named rules with a uniform ``rule(election, k) -> RuleOutcome`` interface."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from .assignment import L1, LMIN
from .election import Election, ElectionError, RuleOutcome
from .greedy import greedy_cc, greedy_monroe
from .rules import elect_bloc, elect_cc_exact, elect_kborda, elect_monroe_exact, elect_sntv
from .scoring import F_BLOC, F_CC, F_KBORDA, F_SNTV, CommitteeScoringFunction
from .stv import PUT, StvConfig, elect_stv

RULE_NAMES = (
    "stv",
    "sntv",
    "bloc",
    "k-borda",
    "l1-cc",
    "lmin-cc",
    "greedy-cc",
    "l1-monroe",
    "lmin-monroe",
    "greedy-monroe",
)

SCORING_FUNCTIONS = {"sntv": F_SNTV, "bloc": F_BLOC, "k-borda": F_KBORDA, "l1-cc": F_CC}
NEEDS_K_LE_N = {"l1-monroe", "lmin-monroe", "greedy-monroe"}


@dataclass
class Rule:
    name: str
    fn: Callable[[Election, int], RuleOutcome]
    # outcome depends only on the multiset of votes
    anonymous: bool = True
    scoring_function: CommitteeScoringFunction | None = None
    cache: dict | None = field(default=None, repr=False)

    def __call__(self, e: Election, k: int) -> RuleOutcome:
        if self.cache is None:
            return self.fn(e, k)
        key = (e.labels, e.anonymous_key if self.anonymous else e.votes, k)
        out = self.cache.get(key)
        if out is None:
            out = self.cache[key] = self.fn(e, k)
        return out

    def max_k(self, e: Election) -> int:
        return min(e.m, e.n) if self.name in NEEDS_K_LE_N else e.m

    def memoized(self) -> Rule:
        return Rule(self.name, self.fn, self.anonymous, self.scoring_function, cache={})


def _greedy(fn, tie_mode, cap, e, k):
    return fn(e, k, tie_mode=tie_mode, universe_cap=cap)[0]


def get_rule(name: str, tie_mode: str = PUT, universe_cap: int = 10**6) -> Rule:
    if name not in RULE_NAMES:
        raise ElectionError(f"unknown rule {name!r}; choose from {', '.join(RULE_NAMES)}")
    put = tie_mode == PUT
    if name == "stv":
        fn = partial(_stv, StvConfig(tie_mode=tie_mode, universe_cap=universe_cap))
        return Rule(name, fn, anonymous=put)
    if name == "greedy-cc":
        return Rule(name, partial(_greedy, greedy_cc, tie_mode, universe_cap), anonymous=put)
    if name == "greedy-monroe":
        return Rule(name, partial(_greedy, greedy_monroe, tie_mode, universe_cap), anonymous=put)
    fn = {
        "sntv": elect_sntv,
        "bloc": elect_bloc,
        "k-borda": elect_kborda,
        "l1-cc": partial(_cc, L1),
        "lmin-cc": partial(_cc, LMIN),
        "l1-monroe": partial(_monroe, L1),
        "lmin-monroe": partial(_monroe, LMIN),
    }[name]
    return Rule(name, fn, scoring_function=SCORING_FUNCTIONS.get(name))


def _stv(cfg, e, k):
    return elect_stv(e, k, cfg)


def _cc(mode, e, k):
    return elect_cc_exact(e, k, mode=mode)


def _monroe(mode, e, k):
    return elect_monroe_exact(e, k, mode=mode)
