"""Partial bijections of ``[0, m)`` and symmetric inverse semigroups.

Maps act on the right: ``(x)(beta gamma) = ((x)beta)gamma``. The product
``beta * gamma`` is defined on the points of ``Dom beta`` that ``beta`` sends
into ``Dom gamma``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Mapping

import numpy as np

from .core import FiniteSemigroup, InverseStructure
from .errors import BoundExceeded, GroundMismatch, InvariantViolation

DEFAULT_BOUND = 5


@dataclass(frozen=True)
class PartialBijection:
    """An injective partial map of ``[0, ground)``.

    ``images[x]`` is the image of ``x``, or ``-1`` where ``x`` is outside the domain.
    """

    ground: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.ground:
            raise GroundMismatch(f"expected {self.ground} entries, got {len(self.images)}")
        seen = set()
        for y in self.images:
            if y == -1:
                continue
            if not 0 <= y < self.ground:
                raise ValueError(f"image {y} outside [0, {self.ground})")
            if y in seen:
                raise ValueError(f"not injective: {y} is hit twice")
            seen.add(y)

    @classmethod
    def from_pairs(cls, ground: int, pairs: Mapping[int, int] | Iterable[tuple[int, int]]):
        images = [-1] * ground
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        for x, y in items:
            if not 0 <= x < ground:
                raise ValueError(f"point {x} outside [0, {ground})")
            if images[x] != -1:
                raise ValueError(f"point {x} mapped twice")
            images[x] = y
        return cls(ground, tuple(images))

    @classmethod
    def identity(cls, ground: int, on: Iterable[int] | None = None):
        on = range(ground) if on is None else set(on)
        return cls(ground, tuple(x if x in on else -1 for x in range(ground)))

    @classmethod
    def empty(cls, ground: int):
        return cls(ground, (-1,) * ground)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images) if y != -1)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(y for y in self.images if y != -1)

    @property
    def rank(self) -> int:
        return sum(1 for y in self.images if y != -1)

    def pairs(self) -> dict[int, int]:
        return {x: y for x, y in enumerate(self.images) if y != -1}

    def is_idempotent(self) -> bool:
        return all(y == -1 or y == x for x, y in enumerate(self.images))

    def __call__(self, x: int) -> int:
        y = self.images[x]
        if y == -1:
            raise KeyError(x)
        return y

    def __mul__(self, other: "PartialBijection") -> "PartialBijection":
        return compose(self, other)

    def sort_key(self):
        mask = sum(1 << x for x, y in enumerate(self.images) if y != -1)
        return (mask, self.images)

    def __str__(self):
        return "{" + ",".join(f"{x}:{y}" for x, y in self.pairs().items()) + "}"


def compose(beta: PartialBijection, gamma: PartialBijection) -> PartialBijection:
    if beta.ground != gamma.ground:
        raise GroundMismatch(f"ground sets differ: {beta.ground} vs {gamma.ground}")
    g = gamma.images
    return PartialBijection(beta.ground, tuple(-1 if y == -1 else g[y] for y in beta.images))


def invert(beta: PartialBijection) -> PartialBijection:
    images = [-1] * beta.ground
    for x, y in enumerate(beta.images):
        if y != -1:
            images[y] = x
    return PartialBijection(beta.ground, tuple(images))


def restrict_to(beta: PartialBijection, points: Iterable[int]) -> PartialBijection:
    keep = set(points)
    return PartialBijection(beta.ground, tuple(y if x in keep else -1 for x, y in enumerate(beta.images)))


def symmetric_inverse_size(m: int) -> int:
    return sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))


class ConcreteInverseSemigroup:
    """An inverse semigroup of partial bijections, together with its Cayley table.

    ``elements`` are in canonical order (domain bitmask, then image sequence);
    element ``i`` of :attr:`abstraction` is ``elements[i]``.
    """

    def __init__(self, ground: int, elements: Iterable[PartialBijection], check: bool = True):
        elems = sorted(set(elements), key=PartialBijection.sort_key)
        for e in elems:
            if e.ground != ground:
                raise GroundMismatch(f"element {e} is not on ground {ground}")
        self.ground = ground
        self.elements = tuple(elems)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.abstraction = self._tabulate(check)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, beta):
        return beta in self.index

    def _tabulate(self, check: bool) -> InverseStructure:
        n, m = len(self.elements), self.ground
        if m == 0:
            table = np.zeros((n, n), dtype=np.int64)
        else:
            E = np.array([e.images for e in self.elements], dtype=np.int64).reshape(n, m)
            padded = np.concatenate([E, -np.ones((n, 1), dtype=np.int64)], axis=1)
            weights = (m + 1) ** np.arange(m, dtype=np.int64)
            codes = (E + 1) @ weights
            order = np.argsort(codes)
            sorted_codes = codes[order]
            table = np.empty((n, n), dtype=np.int64)
            chunk = max(1, 4_000_000 // max(1, n * m))
            cols = np.arange(n)[:, None]
            for start in range(0, n, chunk):
                rows = E[start:start + chunk]
                # prod[i, j, x] = (x) rows[i] * E[j]
                prod = padded[cols[None, :, :], rows[:, None, :]]
                pc = (prod + 1) @ weights
                pos = np.searchsorted(sorted_codes, pc)
                pos = np.minimum(pos, n - 1)
                if check and not np.array_equal(sorted_codes[pos], pc):
                    raise InvariantViolation("element set is not closed under composition")
                table[start:start + chunk] = order[pos]
        names = [str(e) for e in self.elements]
        base = FiniteSemigroup(table, names, check=False)
        inverse = []
        for e in self.elements:
            ei = invert(e)
            if ei not in self.index:
                raise InvariantViolation(f"element set is not closed under inversion at {e}")
            inverse.append(self.index[ei])
        idem = frozenset(i for i, e in enumerate(self.elements) if e.is_idempotent())
        return InverseStructure(base, tuple(inverse), idem)


def enumerate_symmetric_inverse(m: int, bound: int = DEFAULT_BOUND) -> ConcreteInverseSemigroup:
    if m < 0:
        raise ValueError("ground set size must be non-negative")
    if m > bound:
        raise BoundExceeded(symmetric_inverse_size(m), symmetric_inverse_size(bound))
    elems = []
    points = range(m)
    for k in range(m + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                elems.append(PartialBijection.from_pairs(m, zip(dom, img)))
    return ConcreteInverseSemigroup(m, elems, check=False)


def _common_ground(gens) -> int:
    grounds = {g.ground for g in gens}
    if len(grounds) != 1:
        raise GroundMismatch(f"generators live on different ground sets: {sorted(grounds)}")
    return grounds.pop()


def generated_concrete(gens: Iterable[PartialBijection], limit: int | None = None) -> ConcreteInverseSemigroup:
    """Smallest set containing ``gens`` closed under composition and inversion."""
    gens = list(gens)
    if not gens:
        raise ValueError("an inverse semigroup needs at least one generator")
    m = _common_ground(gens)
    letters = sorted(set(gens) | {invert(g) for g in gens}, key=PartialBijection.sort_key)
    found = set(letters)
    queue = deque(letters)
    while queue:
        w = queue.popleft()
        for g in letters:
            p = compose(w, g)
            if p not in found:
                found.add(p)
                if limit is not None and len(found) > limit:
                    raise BoundExceeded(len(found), limit)
                queue.append(p)
    return ConcreteInverseSemigroup(m, found, check=False)


def abstractify(C: ConcreteInverseSemigroup) -> tuple[InverseStructure, tuple[PartialBijection, ...]]:
    return C.abstraction, C.elements


def left_ample_in_symmetric(maps: Iterable[PartialBijection]):
    """``None`` if ``beta beta^-1`` lies in the set for every member, else a failing member."""
    maps = set(maps)
    for b in sorted(maps, key=PartialBijection.sort_key):
        if compose(b, invert(b)) not in maps:
            return b
    return None


def right_ample_in_symmetric(maps: Iterable[PartialBijection]):
    maps = set(maps)
    for b in sorted(maps, key=PartialBijection.sort_key):
        if compose(invert(b), b) not in maps:
            return b
    return None
