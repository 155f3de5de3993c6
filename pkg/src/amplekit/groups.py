"""Small finite groups used as structure groups of Rees/Brandt semigroups."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .core import FiniteSemigroup


@dataclass(frozen=True)
class FiniteGroup:
    base: FiniteSemigroup
    identity: int
    inverse: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def elements(self) -> range:
        return self.base.elements

    def mul(self, a: int, b: int) -> int:
        return self.base.mul(a, b)

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def name(self, a: int) -> str:
        return self.base.name(a)

    def index(self, token) -> int:
        return self.base.index(token)

    def is_subgroup(self, H) -> bool:
        H = set(H)
        return (self.identity in H
                and all(self.mul(a, self.inv(b)) in H for a in H for b in H))

    def subgroups(self) -> list[frozenset[int]]:
        out = []
        others = [g for g in self.elements if g != self.identity]
        for k in range(len(others) + 1):
            for extra in combinations(others, k):
                H = frozenset((self.identity, *extra))
                if self.is_subgroup(H):
                    out.append(H)
        return out


def group_from_semigroup(S: FiniteSemigroup) -> FiniteGroup:
    ident = next((e for e in S.elements
                  if all(S.mul(e, x) == x == S.mul(x, e) for x in S.elements)), None)
    if ident is None:
        raise ValueError("no identity element")
    inverse = []
    for a in S.elements:
        b = next((b for b in S.elements if S.mul(a, b) == ident == S.mul(b, a)), None)
        if b is None:
            raise ValueError(f"element {S.name(a)} has no inverse")
        inverse.append(b)
    return FiniteGroup(S, ident, tuple(inverse))


def _power_names(n: int) -> list[str]:
    return ["1", "g"] + [f"g^{k}" for k in range(2, n)] if n > 1 else ["1"]


def cyclic_group(n: int) -> FiniteGroup:
    """``Z_n`` written multiplicatively: element ``k`` is ``g^k``."""
    if n < 1:
        raise ValueError("group order must be positive")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(FiniteSemigroup(table, _power_names(n)), 0,
                       tuple((-a) % n for a in range(n)))


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def klein_four() -> FiniteGroup:
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return FiniteGroup(FiniteSemigroup(table, ["1", "a", "b", "ab"]), 0, (0, 1, 2, 3))


def group_by_name(name: str) -> FiniteGroup:
    """``trivial``, ``Z<n>`` / ``C<n>``, or ``klein`` / ``V4``."""
    key = name.strip().lower()
    if key in ("trivial", "1", "e"):
        return trivial_group()
    if key in ("klein", "v4", "klein4", "z2xz2"):
        return klein_four()
    m = re.fullmatch(r"[zc]_?(\d+)", key)
    if m:
        return cyclic_group(int(m.group(1)))
    raise ValueError(f"unknown group {name!r}")
