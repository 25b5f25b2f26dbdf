"""Measure how close Greedy-CC and Greedy-Monroe get to the exact optimum on random elections.

    python scripts/approximation_sweep.py --elections 500 --seed 0
"""

import argparse
import random
from collections import defaultdict

from multiwinner.greedy import check_approximation
from multiwinner.search import impartial_culture
from multiwinner.stv import PUT


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--elections", type=int, default=500)
    p.add_argument("--max-candidates", type=int, default=7)
    p.add_argument("--max-voters", type=int, default=8)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = random.Random(args.seed)
    worst = defaultdict(lambda: None)
    counts = defaultdict(lambda: [0, 0, 0])  # checked, skipped, failed
    for _ in range(args.elections):
        m = rng.randint(2, args.max_candidates)
        n = rng.randint(1, args.max_voters)
        k = rng.randint(1, min(args.max_k, m, n))
        e = impartial_culture(m, n, rng)
        for rule in ("greedy-cc", "greedy-monroe"):
            rep = check_approximation(e, k, rule, tie_mode=PUT)
            c = counts[rule]
            c[0] += 1
            c[1] += rep.skipped
            c[2] += not rep.passed
            if rep.ratio is not None and (worst[rule] is None or rep.ratio < worst[rule]):
                worst[rule] = rep.ratio

    print(f"{'rule':15}{'checked':>9}{'skipped':>9}{'failed':>8}{'worst ratio':>14}")
    for rule in ("greedy-cc", "greedy-monroe"):
        checked, skipped, failed = counts[rule]
        print(f"{rule:15}{checked:>9}{skipped:>9}{failed:>8}{float(worst[rule]):>14.4f}")
    return 1 if any(c[2] for c in counts.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
