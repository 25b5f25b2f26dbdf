"""Check every cell of the rule-by-axiom matrix and print the report.

    python scripts/reproduce_table.py --max-candidates 4 --max-voters 5 --witness-dir witnesses/
"""

import argparse
import json
import logging
import time

from multiwinner.registry import RULE_NAMES
from multiwinner.search import SearchBounds
from multiwinner.table import verify_table


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-candidates", type=int, default=4)
    p.add_argument("--max-voters", type=int, default=5)
    p.add_argument("--rule", action="append", choices=RULE_NAMES)
    p.add_argument("--witness-dir")
    p.add_argument("--json", help="also write the per-cell records to this file")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    bounds = SearchBounds(max_candidates=args.max_candidates, max_voters=args.max_voters)
    start = time.perf_counter()
    report = verify_table(bounds, rules=args.rule, witness_dir=args.witness_dir)
    print(report.render(), end="")
    logging.info("finished in %.1fs", time.perf_counter() - start)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.records(), fh, indent=2)
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
