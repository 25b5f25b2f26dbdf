"""Elections over strict rankings, and the profile algebra used by the axioms.

Candidates are referred to by integer ids ``0..m-1`` everywhere; labels are
only used for input and output. A vote is a tuple of candidate ids listed from
most to least preferred. Positions are 1-based, so the top candidate of a vote
has position 1.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

PreferenceOrder = tuple[int, ...]
Committee = tuple[int, ...]


class ElectionError(ValueError):
    """An operation was given arguments outside its domain."""


class ParseError(ElectionError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExhausted(RuntimeError):
    """Tie-breaking exploration exceeded its universe cap.

    ``partial`` holds the committees found before the budget ran out.
    """

    def __init__(self, message: str, partial: Iterable[Committee] = ()):
        super().__init__(message)
        self.partial = tuple(sorted(set(partial)))


class Candidate(NamedTuple):
    id: int
    label: str


_LABEL = re.compile(r"^[^\s,>#]+$")


@dataclass(frozen=True)
class Election:
    """A candidate roster and an ordered sequence of strict rankings."""

    labels: tuple[str, ...]
    votes: tuple[PreferenceOrder, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        votes = tuple(tuple(v) for v in self.votes)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "votes", votes)
        m = len(labels)
        if m < 1:
            raise ElectionError("an election needs at least one candidate")
        if len(set(labels)) != m:
            raise ElectionError("candidate labels must be unique")
        for label in labels:
            if not _LABEL.match(label):
                raise ElectionError(f"invalid candidate label {label!r}")
        if not votes:
            raise ElectionError("an election needs at least one vote")
        full = set(range(m))
        for i, vote in enumerate(votes):
            if len(vote) != m or set(vote) != full:
                raise ElectionError(f"vote {i} is not a ranking of all {m} candidates")

    @classmethod
    def from_orders(cls, labels: Sequence[str], orders: Iterable[Sequence[str]]) -> Election:
        """Build an election from rankings written with labels."""
        index = {label: i for i, label in enumerate(labels)}
        try:
            votes = tuple(tuple(index[x] for x in order) for order in orders)
        except KeyError as exc:
            raise ElectionError(f"unknown candidate {exc.args[0]!r}") from None
        return cls(tuple(labels), votes)

    @classmethod
    def from_strings(cls, orders: Iterable[str], labels: str | Sequence[str] | None = None) -> Election:
        """Shorthand for single-letter candidates: ``from_strings(["abc", "bca"])``."""
        orders = list(orders)
        if labels is None:
            labels = sorted(orders[0])
        return cls.from_orders(list(labels), [list(o) for o in orders])

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return len(self.votes)

    @property
    def candidates(self) -> tuple[Candidate, ...]:
        return tuple(Candidate(i, label) for i, label in enumerate(self.labels))

    @cached_property
    def positions(self) -> tuple[tuple[int, ...], ...]:
        """``positions[v][c]`` is the 1-based position of candidate c in vote v."""
        table = []
        for vote in self.votes:
            row = [0] * self.m
            for i, c in enumerate(vote, start=1):
                row[c] = i
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def anonymous_key(self) -> tuple[PreferenceOrder, ...]:
        """The votes as a sorted tuple; equal for elections that differ only in voter order."""
        return tuple(sorted(self.votes))

    def anonymized(self) -> Counter:
        """Multiset view: each distinct ranking with its multiplicity."""
        return Counter(self.votes)

    def label_of(self, committee: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[c] for c in sorted(committee)) + "}"

    def with_votes(self, votes: Iterable[Sequence[int]]) -> Election:
        return Election(self.labels, tuple(tuple(v) for v in votes))

    def committees(self, k: int) -> list[Committee]:
        """All k-subsets of the candidates, in lexicographic order."""
        check_k(self, k)
        return list(combinations(range(self.m), k))

    def relabel(self, perm: Sequence[int]) -> Election:
        """Rename candidate ``c`` to ``perm[c]`` in every vote (labels stay in place)."""
        return self.with_votes(tuple(perm[c] for c in vote) for vote in self.votes)


def check_k(e: Election, k: int) -> None:
    if not 1 <= k <= e.m:
        raise ElectionError(f"committee size k={k} outside 1..{e.m}")


def position(vote: Sequence[int], c: int) -> int:
    """1-based position of candidate ``c`` in ``vote``."""
    try:
        return vote.index(c) + 1
    except ValueError:
        raise ElectionError(f"candidate {c!r} does not appear in the vote") from None


def concat(e1: Election, e2: Election) -> Election:
    if e1.labels != e2.labels:
        raise ElectionError("cannot concatenate elections over different candidate rosters")
    return Election(e1.labels, e1.votes + e2.votes)


def replicate(e: Election, t: int) -> Election:
    if t < 1:
        raise ElectionError(f"replication factor must be positive, got {t}")
    return Election(e.labels, e.votes * t)


def bounded_splits(counts: Sequence[int], total: int):
    """Every vector ``d`` with ``0 <= d[i] <= counts[i]`` and ``sum(d) == total``."""
    if not counts:
        if total == 0:
            yield ()
        return
    rest = sum(counts[1:])
    for d in range(max(0, total - rest), min(counts[0], total) + 1):
        for tail in bounded_splits(counts[1:], total - d):
            yield (d,) + tail


def shift_forward(e: Election, voter: int, c: int) -> Election:
    """Move ``c`` one position up in vote ``voter``; ``c`` must not be ranked first."""
    vote = list(e.votes[voter])
    i = vote.index(c)
    if i == 0:
        raise ElectionError("candidate is already ranked first")
    vote[i - 1], vote[i] = vote[i], vote[i - 1]
    votes = list(e.votes)
    votes[voter] = tuple(vote)
    return e.with_votes(votes)


# --- election file format ---------------------------------------------------

_VOTE_LINE = re.compile(r"^(?:(\d+)\s*\*\s*)?vote\s*:(.*)$")


def parse_election(text: str) -> Election:
    labels: list[str] | None = None
    index: dict[str, int] = {}
    votes: list[PreferenceOrder] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("candidates"):
            if labels is not None:
                raise ParseError("duplicate candidates line", lineno)
            head, _, rest = line.partition(":")
            if head.strip() != "candidates" or not _:
                raise ParseError("expected 'candidates: <label>,...'", lineno)
            labels = [x.strip() for x in rest.split(",")]
            for label in labels:
                if not _LABEL.match(label):
                    raise ParseError(f"invalid candidate label {label!r}", lineno)
            if len(set(labels)) != len(labels):
                raise ParseError("duplicate candidate label", lineno)
            index = {label: i for i, label in enumerate(labels)}
            continue
        match = _VOTE_LINE.match(line)
        if match is None:
            raise ParseError(f"unrecognised line {line!r}", lineno)
        if labels is None:
            raise ParseError("vote before candidates line", lineno)
        count = int(match.group(1)) if match.group(1) is not None else 1
        if count < 1:
            raise ParseError("vote multiplicity must be positive", lineno)
        names = [x.strip() for x in match.group(2).split(">")]
        seen = set()
        vote = []
        for name in names:
            if name not in index:
                raise ParseError(f"unknown candidate {name!r}", lineno)
            if name in seen:
                raise ParseError(f"candidate {name!r} appears twice", lineno)
            seen.add(name)
            vote.append(index[name])
        if len(vote) != len(labels):
            missing = sorted(set(labels) - seen)
            raise ParseError(f"vote does not rank {', '.join(missing)}", lineno)
        votes.extend([tuple(vote)] * count)
    if labels is None:
        raise ParseError("missing candidates line")
    if not votes:
        raise ParseError("election has no votes")
    return Election(tuple(labels), tuple(votes))


def serialize_election(e: Election, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append("candidates: " + ",".join(e.labels))
    for vote in e.votes:
        lines.append("vote: " + " > ".join(e.labels[c] for c in vote))
    return "\n".join(lines) + "\n"


def read_election(path) -> Election:
    with open(path, encoding="utf-8") as fh:
        return parse_election(fh.read())


@dataclass(frozen=True)
class RuleOutcome:
    """Tied-for-winning committees, optionally with their shared objective value."""

    committees: tuple[Committee, ...]
    value: object = field(default=None, compare=True)

    def __post_init__(self):
        committees = tuple(sorted({tuple(sorted(c)) for c in self.committees}))
        if not committees:
            raise ElectionError("a rule outcome needs at least one committee")
        if len({len(c) for c in committees}) != 1:
            raise ElectionError("all committees in an outcome must have the same size")
        object.__setattr__(self, "committees", committees)

    def __contains__(self, committee) -> bool:
        return tuple(sorted(committee)) in self.committees

    def __iter__(self):
        return iter(self.committees)

    def __len__(self):
        return len(self.committees)

    @property
    def unique(self) -> Committee | None:
        return self.committees[0] if len(self.committees) == 1 else None

    def as_sets(self) -> set[frozenset]:
        return {frozenset(c) for c in self.committees}

    def labelled(self, e: Election) -> list[str]:
        return [e.label_of(c) for c in self.committees]
