"""Reproduce the rule-by-axiom summary matrix.

Each cell of the matrix expands into one or more claims about a single axiom.
A positive claim passes when a sweep of the bounded universe finds no
violation; a negative claim passes when a shipped witness or a bounded search
produces a concrete violation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import axioms as ax
from . import witnesses
from .election import serialize_election
from .registry import RULE_NAMES, get_rule
from .search import SearchBounds, search_counterexample

COLUMNS = (
    "committee-monotonicity",
    "solid-coalitions",
    "consensus-committee",
    "unanimity",
    "monotonicity",
    "homogeneity",
    "consistency",
)

# Marks: yes / no; [d] holds when n >= k(k+1); [c] holds when k divides n;
# [h] and [s] need STV or tie-breaking variants that are not implemented.
TABLE_1 = {
    "stv": ("no", "yes[d]", "yes[d]", "strong", "no", "yes[h]", "no"),
    "sntv": ("yes", "yes", "yes", "weak", "C/NC", "yes", "yes"),
    "bloc": ("no", "no", "no", "fix maj.", "C/NC", "yes", "yes"),
    "k-borda": ("yes", "no", "no", "strong", "C/NC", "yes", "yes"),
    "l1-cc": ("no", "no", "yes", "weak", "C", "yes", "yes"),
    "lmin-cc": ("no", "no", "yes", "weak", "C", "yes", "no"),
    "greedy-cc": ("yes", "no", "no", "weak", "no", "yes", "no"),
    "l1-monroe": ("no", "no", "yes", "strong", "no", "yes[c]", "no"),
    "lmin-monroe": ("no", "no", "yes", "strong", "no", "yes[c]", "no"),
    "greedy-monroe": ("no", "yes", "yes", "strong", "no", "yes[s]", "no"),
}

OUT_OF_SCOPE = {
    "yes[h]": "needs an unrounded quota with fractional vote transfers",
    "yes[s]": "needs a dedicated intermediate tie-breaking rule",
}

GUARDS = {
    "n>=k(k+1)": lambda e, k: e.n >= k * (k + 1),
    "k|n": lambda e, k: e.n % k == 0,
}

# STV loses strong unanimity on tiny electorates where empty piles force
# arbitrary eliminations; the quota argument needs n >= k(k+1).
EXTRA_GUARDS = {("stv", ax.STRONG_UNANIMITY): "n>=k(k+1)"}

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Claim:
    axiom: str
    holds: bool
    guard: str | None = None

    def describe(self) -> str:
        s = f"{self.axiom} {'holds' if self.holds else 'fails'}"
        return s + (f" when {self.guard}" if self.guard else "")


@dataclass
class ClaimResult:
    claim: Claim
    status: str
    source: str  # "sweep", "witness" or "search"
    detail: str
    verdict: ax.AxiomVerdict | None = None
    files: list[str] = field(default_factory=list)


@dataclass
class CellResult:
    rule: str
    column: str
    mark: str
    status: str
    claims: list[ClaimResult] = field(default_factory=list)
    reason: str = ""


def expand(rule: str, column: str, mark: str) -> list[Claim]:
    """The single-axiom claims a matrix cell stands for."""
    guard = {"yes[d]": "n>=k(k+1)", "yes[c]": "k|n"}.get(mark)
    yes = mark.startswith("yes")
    if column == "unanimity":
        levels = {"weak": 1, "strong": 2, "fix maj.": 3}[mark]
        out = [
            Claim(ax.WEAK_UNANIMITY, True),
            Claim(ax.STRONG_UNANIMITY, levels >= 2),
            Claim(ax.FIXED_MAJORITY, levels >= 3),
        ]
    elif column == "monotonicity":
        out = [
            Claim(ax.CANDIDATE_MONOTONICITY, mark in ("C", "C/NC")),
            Claim(ax.NONCROSSING_MONOTONICITY, mark == "C/NC"),
        ]
    elif mark == "yes[c]":
        # holds when k divides n, and the side condition is really needed
        out = [Claim(column, True, guard), Claim(column, False)]
    else:
        out = [Claim(column, yes, guard)]
    return [
        Claim(c.axiom, c.holds, c.guard or (EXTRA_GUARDS.get((rule, c.axiom)) if c.holds else None))
        for c in out
    ]


def _tag(e) -> str:
    return f"m={e.m}, n={e.n}"


def _write_witness(verdict: ax.AxiomVerdict, witness_dir: Path, stem: str) -> list[str]:
    witness_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, e in verdict.elections:
        safe = name.replace("'", "p").replace("+", "_")
        p = witness_dir / f"{stem}.{safe}.elect"
        p.write_text(serialize_election(e, [f"{verdict.rule} {verdict.axiom} k={verdict.k}: {name}"]))
        paths.append(str(p))
    rec = witness_dir / f"{stem}.json"
    rec.write_text(json.dumps(verdict.record(), sort_keys=True) + "\n")
    paths.append(str(rec))
    return paths


def _check_claim(rule, claim: Claim, bounds: SearchBounds, witness_dir: Path | None) -> ClaimResult:
    guard = GUARDS[claim.guard] if claim.guard else None
    if claim.holds:
        v = search_counterexample(rule, claim.axiom, bounds, guard=guard)
        if v.violated:
            files = _write_witness(v, witness_dir, f"{rule.name}.{claim.axiom}") if witness_dir else []
            e = v.elections[0][1]
            return ClaimResult(claim, FAIL, "sweep", f"unexpected violation ({_tag(e)}, k={v.k}): {v.condition}", v, files)
        return ClaimResult(claim, PASS, "sweep", v.note, v)
    for w in witnesses.for_cell(rule.name, claim.axiom):
        v = w.check(rule)
        if v.violated:
            names = [f"profiles/{n}.elect" for n in [w.profile, w.second] if n]
            return ClaimResult(claim, PASS, "witness", f"{', '.join(names)} (k={w.k})", v, names)
    v = search_counterexample(rule, claim.axiom, bounds)
    if v.violated:
        e = v.elections[0][1]
        files = _write_witness(v, witness_dir, f"{rule.name}.{claim.axiom}") if witness_dir else []
        return ClaimResult(claim, PASS, "search", f"found by search ({_tag(e)}, k={v.k})", v, files)
    return ClaimResult(claim, FAIL, "search", f"no counterexample: {v.note}", v)


@dataclass
class TableReport:
    cells: list[CellResult]
    bounds: SearchBounds

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.cells)

    def cell(self, rule: str, column: str) -> CellResult:
        for c in self.cells:
            if c.rule == rule and c.column == column:
                return c
        raise KeyError((rule, column))

    def render(self) -> str:
        rules = list(dict.fromkeys(c.rule for c in self.cells))
        cols = [c for c in COLUMNS if any(x.column == c for x in self.cells)]
        width = max(len(c) for c in cols) + 2
        lines = ["rule".ljust(15) + "".join(c.ljust(width) for c in cols)]
        for r in rules:
            row = r.ljust(15)
            for col in cols:
                try:
                    cell = self.cell(r, col)
                    row += f"{cell.status} ({cell.mark})".ljust(width)
                except KeyError:
                    row += "".ljust(width)
            lines.append(row.rstrip())
        lines.append("")
        for cell in self.cells:
            lines.append(f"{cell.rule} / {cell.column} [{cell.mark}]: {cell.status}")
            if cell.reason:
                lines.append(f"  {cell.reason}")
            for cr in cell.claims:
                lines.append(f"  {cr.status}: {cr.claim.describe()}; {cr.source}: {cr.detail}")
                for f in cr.files:
                    if not f.startswith("profiles/"):
                        lines.append(f"    witness: {f}")
        lines.append("")
        total = sum(c.status != SKIP for c in self.cells)
        good = sum(c.status == PASS for c in self.cells)
        skipped = sum(c.status == SKIP for c in self.cells)
        lines.append(f"{good}/{total} in-scope cells match, {skipped} skipped")
        return "\n".join(lines) + "\n"

    def records(self) -> list[dict]:
        out = []
        for cell in self.cells:
            out.append(
                {
                    "rule": cell.rule,
                    "column": cell.column,
                    "mark": cell.mark,
                    "status": cell.status,
                    "claims": [
                        {
                            "axiom": cr.claim.axiom,
                            "expected": "holds" if cr.claim.holds else "fails",
                            "guard": cr.claim.guard,
                            "status": cr.status,
                            "source": cr.source,
                            "detail": cr.detail,
                            "witness": cr.files,
                        }
                        for cr in cell.claims
                    ],
                    **({"reason": cell.reason} if cell.reason else {}),
                }
            )
        return out


def verify_table(
    bounds: SearchBounds | None = None,
    rules=None,
    columns=None,
    witness_dir=None,
) -> TableReport:
    bounds = bounds or SearchBounds()
    witness_dir = Path(witness_dir) if witness_dir else None
    cells = []
    for name in rules or RULE_NAMES:
        rule = get_rule(name).memoized()
        for col, mark in zip(COLUMNS, TABLE_1[name]):
            if columns is not None and col not in columns:
                continue
            if mark in OUT_OF_SCOPE:
                cells.append(CellResult(name, col, mark, SKIP, reason=f"out of scope: {OUT_OF_SCOPE[mark]}"))
                continue
            results = [_check_claim(rule, c, bounds, witness_dir) for c in expand(name, col, mark)]
            status = PASS if all(r.status == PASS for r in results) else FAIL
            cells.append(CellResult(name, col, mark, status, results))
    return TableReport(cells, bounds)
