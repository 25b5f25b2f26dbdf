"""Command-line front end: ``python -m multiwinner <verb> ...``.

Exit codes: 0 success (or axiom holds), 1 axiom violated, 2 unreadable or
malformed input, 3 tie-breaking budget exhausted or search inconclusive,
64 invalid flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import axioms as ax
from .election import BudgetExhausted, ElectionError, ParseError, read_election, serialize_election
from .greedy import greedy_cc, greedy_monroe
from .registry import RULE_NAMES, get_rule
from .search import EXHAUSTIVE, MODES, SearchBounds, search_counterexample
from .stv import PUT, TIE_MODES
from .table import COLUMNS, verify_table

SCHEMA = "multiwinner/1"
EXIT_VIOLATED, EXIT_INPUT, EXIT_BUDGET, EXIT_USAGE = 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str | None:
    if x is None:
        return None
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else str(x)
    return str(x)


def _emit(args, record: dict, plain: str):
    if args.format == "structured":
        print(json.dumps({"schema": SCHEMA, "verb": args.verb, **record}, sort_keys=True))
    else:
        print(plain)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multiwinner", description="Multiwinner voting rules and axiom checks.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, rule=True):
        if rule:
            p.add_argument("--rule", required=True, choices=RULE_NAMES)
        p.add_argument("--tie-breaking", choices=TIE_MODES, default=PUT)
        p.add_argument("--universe-cap", type=int, default=10**6)
        p.add_argument("--format", choices=("plain", "structured"), default="plain")

    def bounds(p):
        p.add_argument("--max-candidates", type=int, default=4)
        p.add_argument("--max-voters", type=int, default=5)
        p.add_argument("--max-k", type=int)
        p.add_argument("--max-t", type=int, default=3)
        p.add_argument("--mode", choices=MODES, default=EXHAUSTIVE)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=1000)
        p.add_argument("--witness-dir")

    p = sub.add_parser("elect", help="run a rule on an election file")
    common(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--input", required=True)

    p = sub.add_parser("check", help="check an axiom on one instance")
    common(p)
    p.add_argument("--axiom", required=True, choices=ax.AXIOMS)
    p.add_argument("-k", type=int, help="committee size (default: every valid size)")
    p.add_argument("--input", required=True)
    p.add_argument("--input2", help="second election, for consistency")
    p.add_argument("--t", type=int, action="append", help="replication factor for homogeneity (repeatable)")
    p.add_argument("--witness-dir")

    p = sub.add_parser("search", help="search bounded elections for a counterexample")
    common(p)
    p.add_argument("--axiom", required=True, choices=ax.AXIOMS)
    bounds(p)

    p = sub.add_parser("table", help="reproduce the rule-by-axiom summary matrix")
    p.add_argument("--format", choices=("plain", "structured"), default="plain")
    p.add_argument("--only-rule", action="append", choices=RULE_NAMES)
    p.add_argument("--only-cell", action="append", metavar="RULE:COLUMN")
    bounds(p)

    p = sub.add_parser("trace", help="show the iterations of a greedy rule")
    common(p, rule=False)
    p.add_argument("--rule", required=True, choices=("greedy-cc", "greedy-monroe"))
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--input", required=True)
    return parser


def _rule(args):
    if args.universe_cap < 1:
        raise UsageError("--universe-cap must be at least 1")
    return get_rule(args.rule, args.tie_breaking, args.universe_cap)


def run_elect(args) -> int:
    e = read_election(args.input)
    try:
        out = _rule(args)(e, args.k)
    except BudgetExhausted as exc:
        exc.partial = tuple(e.label_of(c) for c in exc.partial)
        raise
    for c in out:
        _emit(args, {"rule": args.rule, "k": args.k, "committee": e.label_of(c), "value": _fmt(out.value)}, e.label_of(c))
    if out.value is not None and args.format == "plain":
        print(f"value: {_fmt(out.value)}")
    return 0


def _report_verdict(args, v: ax.AxiomVerdict) -> int:
    paths = []
    if v.violated and getattr(args, "witness_dir", None):
        d = Path(args.witness_dir)
        d.mkdir(parents=True, exist_ok=True)
        stem = f"{v.rule}.{v.axiom}"
        for name, e in v.elections:
            p = d / f"{stem}.{name.replace(chr(39), 'p').replace('+', '_')}.elect"
            p.write_text(serialize_election(e, [f"{v.rule} {v.axiom} k={v.k}: {name}"]))
            paths.append(str(p))
    if args.format == "structured":
        rec = {"rule": v.rule, "axiom": v.axiom, "k": v.k, "verdict": v.status, "witness-path": paths}
        if v.violated:
            rec["breach"] = v.record()
            rec["witness"] = {name: serialize_election(e) for name, e in v.elections}
        if v.note:
            rec["note"] = v.note
        _emit(args, rec, "")
    else:
        print(v.status + (f" ({v.note})" if v.note else ""))
        if v.violated:
            print(f"condition: {v.condition}")
            print("breach: " + json.dumps(v.record(), sort_keys=True))
            for name, e in v.elections:
                print(f"--- {name}")
                print(serialize_election(e), end="")
            for p in paths:
                print(f"witness: {p}")
    return {ax.HOLDS: 0, ax.VIOLATED: EXIT_VIOLATED, ax.INCONCLUSIVE: EXIT_BUDGET}[v.status]


def run_check(args) -> int:
    e = read_election(args.input)
    e2 = read_election(args.input2) if args.input2 else None
    if args.axiom == ax.CONSISTENCY and e2 is None:
        raise UsageError("consistency needs --input2")
    ts = tuple(args.t) if args.t else (2,)
    v = ax.check(_rule(args), args.axiom, e, args.k, e2=e2, ts=ts)
    return _report_verdict(args, v)


def _bounds(args) -> SearchBounds:
    return SearchBounds(
        max_candidates=args.max_candidates,
        max_voters=args.max_voters,
        max_k=args.max_k,
        mode=args.mode,
        seed=args.seed,
        budget=args.budget,
        max_t=args.max_t,
    )


def run_search(args) -> int:
    v = search_counterexample(_rule(args).memoized(), args.axiom, _bounds(args))
    return _report_verdict(args, v)


def run_table(args) -> int:
    rules, columns = args.only_rule, None
    if args.only_cell:
        rules, columns = [], []
        for spec in args.only_cell:
            rule, _, col = spec.partition(":")
            if rule not in RULE_NAMES or col not in COLUMNS:
                raise UsageError(f"--only-cell expects RULE:COLUMN with COLUMN in {', '.join(COLUMNS)}")
            rules.append(rule)
            columns.append(col)
        rules = list(dict.fromkeys(rules))
    report = verify_table(_bounds(args), rules=rules, columns=columns, witness_dir=args.witness_dir)
    if args.only_cell:
        wanted = set(args.only_cell)
        report.cells = [c for c in report.cells if f"{c.rule}:{c.column}" in wanted]
    if args.format == "structured":
        for rec in report.records():
            _emit(args, rec, "")
    else:
        print(report.render(), end="")
    return 0 if report.ok else 1


def run_trace(args) -> int:
    e = read_election(args.input)
    fn = greedy_cc if args.rule == "greedy-cc" else greedy_monroe
    out, traces = fn(e, args.k, args.tie_breaking, args.universe_cap)
    for i, t in enumerate(traces):
        steps = []
        for j, s in enumerate(t.steps, start=1):
            step = {"iteration": j, "candidate": e.labels[s.candidate], "committee": e.label_of(s.committee), "value": _fmt(s.value)}
            if s.voters is not None:
                step["voters"] = [v + 1 for v in s.voters]
                step["group_size"] = s.group_size
            steps.append(step)
        if args.format == "structured":
            _emit(args, {"rule": args.rule, "k": args.k, "committee": e.label_of(t.committee), "steps": steps}, "")
            continue
        print(f"trace {i + 1}: {e.label_of(t.committee)}")
        for s in steps:
            line = f"  {s['iteration']}. add {s['candidate']} -> {s['committee']} (value {s['value']})"
            if "voters" in s:
                line += f" voters {','.join(map(str, s['voters']))}"
            print(line)
    return 0


COMMANDS = {"elect": run_elect, "check": run_check, "search": run_search, "table": run_table, "trace": run_trace}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except ParseError as exc:
        print(f"error: {args.input if hasattr(args, 'input') else ''}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.partial:
            print("partial: " + " ".join(str(c) for c in exc.partial), file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ElectionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
