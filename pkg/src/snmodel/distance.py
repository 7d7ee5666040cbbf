"""Generalized Hamming distance between structures and edge eligibility.

Structures are compared group by group: consecutive blocks of
``unit_distance`` symbols. Two groups match when they contain the same
multiset of symbols, or when a match table declares them equal. Symbols past
the last full group of the shorter structure are disregarded, trailing
partial groups included.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .structures import Alphabet


@dataclass(frozen=True)
class MatchTable:
    """Declared equivalences between symbol groups of a fixed size.

    ``entries`` maps a group to the set of groups declared equal to it; the
    mapping is symmetric by construction.
    """

    unit: int
    entries: Mapping[str, frozenset[str]]
    alphabet: Alphabet

    def declares_equal(self, g1: str, g2: str) -> bool:
        return g2 in self.entries.get(g1, ())


def parse_match_file(text: str, unit: int, alphabet: Alphabet) -> MatchTable:
    """Parse match rules, one per line: ``TUPLE = [TUPLE [TUPLE ...]]``.

    ``#`` starts a comment and blank lines are ignored. The right side may be
    empty, which contributes no equivalences beyond the default multiset
    rule. Asymmetric input is accepted: the symmetric closure is taken and a
    warning is emitted.
    """
    if unit <= 1:
        raise ValueError("A match table requires unit_distance > 1")

    def check_group(token: str, line_no: int) -> str:
        if len(token) != unit:
            raise ValueError(
                f"line {line_no}: group {token!r} has length {len(token)}, expected {unit}"
            )
        for sym in token:
            if sym not in alphabet:
                raise ValueError(f"line {line_no}: symbol {sym!r} is not in the alphabet")
        return token

    declared: dict[str, set[str]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {line_no}: expected 'TUPLE = [TUPLE ...]', got {raw!r}")
        left_text, right_text = line.split("=", 1)
        left = check_group(left_text.strip(), line_no)
        declared.setdefault(left, set())
        for token in right_text.split():
            right = check_group(token, line_no)
            if right == left:
                continue
            declared[left].add(right)

    asymmetric = False
    for left, rights in list(declared.items()):
        for right in rights:
            if left not in declared.get(right, ()):
                asymmetric = True
                declared.setdefault(right, set()).add(left)
    if asymmetric:
        warnings.warn(
            "match file is not symmetric; missing reverse rules were added",
            stacklevel=2,
        )

    frozen = {g: frozenset(eq) for g, eq in declared.items() if eq}
    return MatchTable(unit=unit, entries=MappingProxyType(frozen), alphabet=alphabet)


@dataclass(frozen=True)
class DistanceConfig:
    """Unit distance, edge threshold, and optional match table."""

    unit_distance: int
    max_distance: int
    match_table: MatchTable | None = None
    alphabet: Alphabet | None = None

    def __post_init__(self) -> None:
        if self.unit_distance < 1:
            raise ValueError("unit_distance must be >= 1")
        if self.max_distance < 0:
            raise ValueError("max_distance must be >= 0")
        if self.match_table is not None:
            if self.unit_distance <= 1:
                raise ValueError("a match table is only allowed when unit_distance > 1")
            if self.match_table.unit != self.unit_distance:
                raise ValueError(
                    f"match table unit {self.match_table.unit} does not match "
                    f"unit_distance {self.unit_distance}"
                )


def groups_equal(g1: str, g2: str, table: MatchTable | None = None) -> bool:
    """True when the groups are multiset-equal or the table declares them equal."""
    if len(g1) != len(g2):
        raise ValueError(f"group length mismatch: {len(g1)} vs {len(g2)}")
    if g1 == g2 or sorted(g1) == sorted(g2):
        return True
    return table is not None and table.declares_equal(g1, g2)


def structure_distance(s1: str, s2: str, cfg: DistanceConfig) -> int:
    """Number of differing groups over the common full-group prefix."""
    if cfg.alphabet is not None:
        cfg.alphabet.validate_word(s1)
        cfg.alphabet.validate_word(s2)
    unit = cfg.unit_distance
    n_groups = min(len(s1), len(s2)) // unit
    table = cfg.match_table
    distance = 0
    for i in range(n_groups):
        lo, hi = i * unit, (i + 1) * unit
        if not groups_equal(s1[lo:hi], s2[lo:hi], table):
            distance += 1
    return distance


def within_max_distance(s1: str, s2: str, cfg: DistanceConfig) -> bool:
    """Edge rule: the distance is at most ``cfg.max_distance``."""
    return structure_distance(s1, s2, cfg) <= cfg.max_distance
