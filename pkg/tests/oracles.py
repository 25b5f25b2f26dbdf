"""Slow, obviously-correct reference implementations used only by the tests.

They work on individual voters (no multiset merging, no assignment solver)
and share nothing with the package beyond the Election container.
"""

from __future__ import annotations

from itertools import combinations, product


def pos(vote, c):
    return vote.index(c) + 1


def borda_sat(m, vote, c):
    return m - pos(vote, c)


def argmax_all(items, key):
    best, out = None, []
    for it in items:
        x = key(it)
        if best is None or x > best:
            best, out = x, [it]
        elif x == best:
            out.append(it)
    return best, out


def committee_scoring(e, k, f):
    """f(increasing positions, m) summed over voters; argmax over all k-sets."""

    def score(W):
        return sum(f(tuple(sorted(pos(v, c) for c in W)), e.m) for v in e.votes)

    best, winners = argmax_all(combinations(range(e.m), k), score)
    return sorted(winners), best


def sntv_f(p, m):
    return sum(1 for x in p if x == 1)


def bloc_f(p, m):
    k = len(p)
    return sum(1 for x in p if x <= k)


def kborda_f(p, m):
    return sum(m - x for x in p)


def cc_f(p, m):
    return m - p[0]


def cc(e, k, mode="l1"):
    agg = sum if mode == "l1" else min

    def value(W):
        return agg(max(borda_sat(e.m, v, c) for c in W) for v in e.votes)

    best, winners = argmax_all(combinations(range(e.m), k), value)
    return sorted(winners), best


def monroe_value(e, W, mode="l1"):
    """Best value over all assignments respecting the floor/ceiling window."""
    n, k = e.n, len(W)
    lo, hi = n // k, -(-n // k)
    agg = sum if mode == "l1" else min
    best = None
    for rep in product(W, repeat=n):
        if all(lo <= rep.count(c) <= hi for c in W):
            x = agg(borda_sat(e.m, v, c) for v, c in zip(e.votes, rep))
            if best is None or x > best:
                best = x
    return best


def monroe(e, k, mode="l1"):
    best, winners = argmax_all(combinations(range(e.m), k), lambda W: monroe_value(e, W, mode))
    return sorted(winners), best


def stv(e, k):
    """Parallel-universes STV branching over concrete voters."""
    q = e.n // (k + 1) + 1
    found = set()

    def go(elected, hopefuls, voters):
        seats = k - len(elected)
        if seats == 0:
            found.add(tuple(sorted(elected)))
            return
        if len(hopefuls) == seats:
            found.add(tuple(sorted(elected | hopefuls)))
            return
        top = {v: next(c for c in e.votes[v] if c in hopefuls) for v in voters}
        plur = {c: sum(1 for v in voters if top[v] == c) for c in hopefuls}
        reaching = [c for c in hopefuls if plur[c] >= q]
        if reaching:
            for c in reaching:
                backers = [v for v in voters if top[v] == c]
                for gone in combinations(backers, q):
                    go(elected | {c}, hopefuls - {c}, voters - set(gone))
        else:
            low = min(plur.values())
            for c in hopefuls:
                if plur[c] == low:
                    go(elected, hopefuls - {c}, voters)

    go(frozenset(), frozenset(range(e.m)), frozenset(range(e.n)))
    return sorted(found)


def greedy_cc(e, k):
    found = set()

    def value(W):
        return sum(max(borda_sat(e.m, v, c) for c in W) for v in e.votes)

    def go(W):
        if len(W) == k:
            found.add(tuple(sorted(W)))
            return
        _, picks = argmax_all([c for c in range(e.m) if c not in W], lambda c: value(W | {c}))
        for c in picks:
            go(W | {c})

    go(frozenset())
    return sorted(found)


def greedy_monroe(e, k):
    """Branch over every maximising (candidate, voter group) pair."""
    lo, r = divmod(e.n, k)
    sizes = [lo + 1] * r + [lo] * (k - r)
    found = set()
    seen = set()

    def go(W, free):
        if (W, free) in seen:
            return
        seen.add((W, free))
        if len(W) == k:
            found.add(tuple(sorted(W)))
            return
        size = sizes[len(W)]
        options = [(c, g) for c in range(e.m) if c not in W for g in combinations(sorted(free), size)]
        _, best = argmax_all(options, lambda cg: sum(borda_sat(e.m, e.votes[v], cg[0]) for v in cg[1]))
        for c, g in best:
            go(W | {c}, free - set(g))

    go(frozenset(), frozenset(range(e.n)))
    return sorted(found)
