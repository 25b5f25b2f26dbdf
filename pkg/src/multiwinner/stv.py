"""Single transferable vote with a Droop quota and whole-vote transfers.

While the committee is incomplete: if some candidate's plurality score reaches
the quota, elect it, delete ``q`` of the votes ranking it first and strike it
from the rest; otherwise eliminate a candidate with the lowest plurality score.
When the remaining candidates exactly fill the open seats they are all
elected.

In parallel-universes mode every choice point branches: which quota-reaching
candidate is elected, which of its supporters are deleted, and which of the
tied lowest candidates is eliminated. Supporters whose remaining rankings
coincide are interchangeable, so deletions are enumerated per distinct
ranking rather than per voter.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .election import BudgetExhausted, Election, ElectionError, RuleOutcome, bounded_splits, check_k

PUT = "parallel-universes"
LEXICOGRAPHIC = "lexicographic"
TIE_MODES = (PUT, LEXICOGRAPHIC)


@dataclass(frozen=True)
class StvConfig:
    tie_mode: str = PUT
    universe_cap: int = 10**6
    # "original": q from the initial number of votes, held fixed for the whole count;
    # "remaining": q recomputed from the votes and seats left in each round.
    quota_basis: str = "original"

    def __post_init__(self):
        if self.tie_mode not in TIE_MODES:
            raise ElectionError(f"unknown tie mode {self.tie_mode!r}")
        if self.universe_cap < 1:
            raise ElectionError("universe cap must be at least 1")
        if self.quota_basis not in ("original", "remaining"):
            raise ElectionError(f"unknown quota basis {self.quota_basis!r}")


def droop_quota(n: int, k: int) -> int:
    return n // (k + 1) + 1


def _strike(votes: Counter, c: int) -> Counter:
    out: Counter = Counter()
    for r, cnt in votes.items():
        out[tuple(x for x in r if x != c)] += cnt
    return out


def elect_stv(e: Election, k: int, cfg: StvConfig | None = None) -> RuleOutcome:
    check_k(e, k)
    cfg = cfg or StvConfig()
    if cfg.tie_mode == LEXICOGRAPHIC:
        return RuleOutcome((_stv_lexicographic(e, k, cfg),))
    return RuleOutcome(tuple(_stv_put(e, k, cfg)))


def _quota(cfg: StvConfig, n0: int, k: int, remaining_votes: int, seats: int) -> int:
    if cfg.quota_basis == "original":
        return droop_quota(n0, k)
    return droop_quota(remaining_votes, seats)


def _stv_put(e: Election, k: int, cfg: StvConfig) -> set:
    start = (frozenset(), frozenset(range(e.m)), tuple(sorted(Counter(e.votes).items())))
    stack = [start]
    seen = {start}
    found: set = set()
    expanded = 0
    while stack:
        elected, hopefuls, votes = stack.pop()
        seats = k - len(elected)
        if seats == 0 or len(hopefuls) == seats:
            found.add(tuple(sorted(elected | hopefuls)) if seats else tuple(sorted(elected)))
            continue
        expanded += 1
        if expanded > cfg.universe_cap:
            raise BudgetExhausted(
                f"STV tie-breaking budget exhausted after {cfg.universe_cap} branches", found
            )
        pool = Counter(dict(votes))
        plur = dict.fromkeys(hopefuls, 0)
        for r, cnt in votes:
            plur[r[0]] += cnt
        q = _quota(cfg, e.n, k, sum(pool.values()), seats)
        children = []
        reaching = sorted(c for c in hopefuls if plur[c] >= q)
        if reaching:
            for c in reaching:
                groups = [r for r, _ in votes if r[0] == c]
                for dels in bounded_splits([pool[r] for r in groups], q):
                    left = pool.copy()
                    for r, d in zip(groups, dels):
                        left[r] -= d
                    left = +left
                    children.append((elected | {c}, hopefuls - {c}, _strike(left, c)))
        else:
            low = min(plur.values())
            for c in sorted(x for x in hopefuls if plur[x] == low):
                children.append((elected, hopefuls - {c}, _strike(pool, c)))
        for el, hp, left in children:
            state = (el, hp, tuple(sorted((+left).items())))
            if state not in seen:
                seen.add(state)
                stack.append(state)
    return found


def _stv_lexicographic(e: Election, k: int, cfg: StvConfig) -> tuple:
    """Deterministic count: lowest candidate id wins every tie, earliest votes are deleted first."""
    votes = [list(v) for v in e.votes]
    elected: list[int] = []
    hopefuls = set(range(e.m))
    while len(elected) < k:
        seats = k - len(elected)
        if len(hopefuls) == seats:
            elected.extend(hopefuls)
            break
        plur = dict.fromkeys(hopefuls, 0)
        for v in votes:
            plur[v[0]] += 1
        q = _quota(cfg, e.n, k, len(votes), seats)
        reaching = sorted(c for c in hopefuls if plur[c] >= q)
        if reaching:
            c = reaching[0]
            dropped = 0
            kept = []
            for v in votes:
                if v[0] == c and dropped < q:
                    dropped += 1
                else:
                    kept.append(v)
            votes = kept
            elected.append(c)
        else:
            low = min(plur.values())
            c = min(x for x in hopefuls if plur[x] == low)
        hopefuls.discard(c)
        votes = [[x for x in v if x != c] for v in votes]
    return tuple(sorted(elected))
