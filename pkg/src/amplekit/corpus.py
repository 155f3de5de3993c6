"""The standard test corpus: small Brandt semigroups, small symmetric inverse
semigroups, and subsemigroups of them.

Everything here is deterministic; iteration order is fixed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterator

from .core import InverseStructure, SubsetHandle, principal_ideals, subset
from .errors import NotClosed
from .groups import FiniteGroup, cyclic_group, klein_four, trivial_group
from .partial import enumerate_symmetric_inverse
from .rees import BrandtSemigroup, brandt, triple_subsemigroup

GROUP_NAMES = ("trivial", "Z2", "Z3", "Z4", "klein")
INDEX_SIZES = (1, 2, 3)
SYMMETRIC_SIZES = (0, 1, 2, 3)
TRIPLE_LIMIT = 40
SMALL_ORDER = 7


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    T: InverseStructure
    brandt: BrandtSemigroup | None = None


def corpus_groups() -> list[tuple[str, FiniteGroup]]:
    return [("trivial", trivial_group()), ("Z2", cyclic_group(2)), ("Z3", cyclic_group(3)),
            ("Z4", cyclic_group(4)), ("klein", klein_four())]


def brandt_entries() -> list[CorpusEntry]:
    out = []
    for gname, G in corpus_groups():
        for k in INDEX_SIZES:
            B = brandt(G, k)
            out.append(CorpusEntry(f"brandt_{gname}_{k}", B.T, B))
    return out


def symmetric_entries() -> list[CorpusEntry]:
    return [CorpusEntry(f"symmetric_{m}", enumerate_symmetric_inverse(m).abstraction)
            for m in SYMMETRIC_SIZES]


def inverse_corpus() -> list[CorpusEntry]:
    return brandt_entries() + symmetric_entries()


def _nonempty_subsets(items) -> Iterator[tuple]:
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(1, len(items) + 1))


@dataclass(frozen=True)
class TripleCase:
    rows: tuple
    H: frozenset[int]
    cols: tuple
    handle: SubsetHandle


def triple_cases(B: BrandtSemigroup, limit: int = TRIPLE_LIMIT) -> list[TripleCase]:
    """Every closed ``(rows x H x cols) u {0}`` with at most ``limit`` elements."""
    out = []
    for rows in _nonempty_subsets(B.I):
        for cols in _nonempty_subsets(B.I):
            for H in _nonempty_subsets(B.group.elements):
                if len(rows) * len(H) * len(cols) + 1 > limit:
                    continue
                try:
                    handle = triple_subsemigroup(B, rows, H, cols)
                except NotClosed:
                    continue
                out.append(TripleCase(rows, frozenset(H), cols, handle))
    return out


def all_subsemigroups(T) -> list[frozenset[int]]:
    """Exhaustive; only sensible for very small ``T``."""
    base = T.base if isinstance(T, InverseStructure) else T
    out = []
    for members in _nonempty_subsets(base.elements):
        if subset(base, members).is_subsemigroup():
            out.append(frozenset(members))
    return out


def subsemigroup_pairs(entry: CorpusEntry, small_order: int = SMALL_ORDER) -> list[frozenset[int]]:
    """Subsemigroups of ``entry.T`` to test: all of them when ``T`` is small,
    otherwise ``T``, ``E(T)``, the principal one-sided ideals and (for Brandt
    semigroups) every closed triple subsemigroup."""
    T = entry.T
    if T.order <= small_order:
        return all_subsemigroups(T)
    seen: dict[frozenset[int], None] = {}
    seen[frozenset(T.elements)] = None
    seen[frozenset(T.idempotents)] = None
    for e in sorted(T.idempotents):
        eS, Se = principal_ideals(T.base, e)
        seen[eS.members] = None
        seen[Se.members] = None
    if entry.brandt is not None:
        for case in triple_cases(entry.brandt):
            seen[case.handle.members] = None
    return list(seen)
