"""Shipped witness elections, one ``.elect`` file per counterexample."""

from __future__ import annotations

from importlib import resources

from ..election import Election, parse_election


def path(name: str):
    return resources.files(__name__) / f"{name}.elect"


def load(name: str) -> Election:
    return parse_election(path(name).read_text(encoding="utf-8"))


def names() -> list[str]:
    return sorted(p.name[: -len(".elect")] for p in resources.files(__name__).iterdir() if p.name.endswith(".elect"))
