"""Finite semigroups as Cayley tables.

Elements are the dense indices ``0..n-1``; display names are presentation only.
Everything here is immutable after construction.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AssociativityError,
    DuplicateNameError,
    NotIdempotent,
    NotSubsemigroup,
    RangeError,
)


def _first_associativity_failure(table: np.ndarray):
    # (i*j)*k versus i*(j*k) over all n^3 triples at once
    left = table[table, :]
    right = table[:, table]
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    i, j, k = (int(v) for v in bad[0])
    return (i, j, k), int(left[i, j, k]), int(right[i, j, k])


def _find_zero(rows) -> int | None:
    n = len(rows)
    for z in range(n):
        if all(rows[z][x] == z and rows[x][z] == z for x in range(n)):
            return z
    return None


class FiniteSemigroup:
    """A finite semigroup given by its multiplication table.

    ``table[i][j]`` is the index of the product ``i*j``. Construction checks
    the range of every entry and associativity (unless ``check=False``, which
    is reserved for tables produced by an operation already known to be
    associative, e.g. composition of partial bijections).
    """

    __slots__ = ("table", "names", "zero", "_rows", "_name_index")

    def __init__(self, table, names: Sequence[str] | None = None, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise RangeError(f"table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise RangeError("a semigroup needs at least one element")
        if arr.min() < 0 or arr.max() >= n:
            i, j = (int(v) for v in np.argwhere((arr < 0) | (arr >= n))[0])
            raise RangeError(f"entry table[{i}][{j}] = {int(arr[i, j])} outside [0, {n})")
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise RangeError(f"expected {n} names, got {len(names)}")
            if len(set(names)) != n:
                dup = next(s for s in names if names.count(s) > 1)
                raise DuplicateNameError(f"duplicate element name {dup!r}")
        if check:
            failure = _first_associativity_failure(arr)
            if failure is not None:
                raise AssociativityError(*failure)
        arr.setflags(write=False)
        self.table = arr
        self.names = names
        self._rows = arr.tolist()
        self.zero = _find_zero(self._rows)
        self._name_index = {s: i for i, s in enumerate(names)} if names else {}

    @property
    def order(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def elements(self) -> range:
        return range(len(self._rows))

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def product(self, word: Iterable[int]) -> int:
        it = iter(word)
        acc = next(it)
        for x in it:
            acc = self._rows[acc][x]
        return acc

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def index(self, token) -> int:
        """Resolve a name or a decimal index to an element index."""
        if isinstance(token, (int, np.integer)):
            i = int(token)
        elif token in self._name_index:
            return self._name_index[token]
        else:
            try:
                i = int(token)
            except ValueError:
                raise RangeError(f"unknown element {token!r}") from None
        if not 0 <= i < self.order:
            raise RangeError(f"element {i} outside [0, {self.order})")
        return i

    def idempotents(self) -> frozenset[int]:
        return frozenset(i for i in self.elements if self._rows[i][i] == i)

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.T).all())

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.table.tobytes(), self.names))

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, zero={self.zero})"


def build_semigroup(table, names: Sequence[str] | None = None) -> FiniteSemigroup:
    return FiniteSemigroup(table, names)


@dataclass(frozen=True)
class InverseStructure:
    """A finite inverse semigroup: its table, inverse map and idempotents."""

    base: FiniteSemigroup
    inverse: tuple[int, ...]
    idempotents: frozenset[int]

    @property
    def order(self) -> int:
        return self.base.order

    @property
    def elements(self) -> range:
        return self.base.elements

    @property
    def zero(self):
        return self.base.zero

    def __len__(self):
        return self.base.order

    def mul(self, a: int, b: int) -> int:
        return self.base.mul(a, b)

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def plus(self, a: int) -> int:
        """``a a^-1``, the identity on the domain of ``a``."""
        return self.base.mul(a, self.inverse[a])

    def star(self, a: int) -> int:
        """``a^-1 a``, the identity on the image of ``a``."""
        return self.base.mul(self.inverse[a], a)

    def name(self, i: int) -> str:
        return self.base.name(i)


@dataclass(frozen=True)
class InverseFailure:
    """Why a semigroup is not inverse: ``element`` has ``inverses`` (zero or several)."""

    element: int
    inverses: tuple[int, ...]


def inverses_of(S: FiniteSemigroup, a: int) -> tuple[int, ...]:
    t = S.table
    xs = np.arange(S.order)
    axa = t[t[a, xs], a]
    xax = t[t[xs, a], xs]
    return tuple(int(x) for x in np.flatnonzero((axa == a) & (xax == xs)))


def detect_inverse_structure(S: FiniteSemigroup) -> InverseStructure | InverseFailure:
    inverse = []
    for a in S.elements:
        cands = inverses_of(S, a)
        if len(cands) != 1:
            return InverseFailure(a, cands)
        inverse.append(cands[0])
    return InverseStructure(S, tuple(inverse), S.idempotents())


def as_inverse(S: FiniteSemigroup) -> InverseStructure:
    """Like :func:`detect_inverse_structure` but raising on failure."""
    res = detect_inverse_structure(S)
    if isinstance(res, InverseFailure):
        raise ValueError(
            f"not an inverse semigroup: element {S.name(res.element)} has "
            f"{len(res.inverses)} inverses"
        )
    return res


def natural_leq(T: InverseStructure, x: int, y: int) -> bool:
    return T.mul(T.plus(x), y) == x


def natural_leq_by_idempotent(T: InverseStructure, x: int, y: int) -> bool:
    """The same order, tested as: some idempotent ``e`` has ``x = e y``."""
    return any(T.mul(e, y) == x for e in T.idempotents)


def idempotent_leq(S: FiniteSemigroup, e: int, f: int) -> bool:
    for u in (e, f):
        if S.mul(u, u) != u:
            raise NotIdempotent(f"{S.name(u)} is not idempotent")
    return S.mul(e, f) == e and S.mul(f, e) == e


@dataclass(frozen=True)
class SubsetHandle:
    """A set of elements of ``parent``; equality is set equality within one parent."""

    parent: FiniteSemigroup = field(compare=True, repr=False)
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(int(m) for m in self.members)
        bad = [m for m in members if not 0 <= m < self.parent.order]
        if bad:
            raise RangeError(f"element {min(bad)} outside [0, {self.parent.order})")
        object.__setattr__(self, "members", members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def names(self) -> list[str]:
        return [self.parent.name(m) for m in sorted(self.members)]

    def closure_violation(self):
        """First pair (in index order) whose product leaves the subset, or ``None``."""
        ms = sorted(self.members)
        for a in ms:
            for b in ms:
                p = self.parent.mul(a, b)
                if p not in self.members:
                    return (a, b), p
        return None

    def is_subsemigroup(self) -> bool:
        return bool(self.members) and self.closure_violation() is None


def subset(S, members: Iterable[int]) -> SubsetHandle:
    parent = S.base if isinstance(S, InverseStructure) else S
    return SubsetHandle(parent, frozenset(members))


def require_subsemigroup(S, members) -> SubsetHandle:
    h = members if isinstance(members, SubsetHandle) else subset(S, members)
    bad = h.closure_violation()
    if bad is not None:
        raise NotSubsemigroup(*bad)
    return h


def subsemigroup_closure(S, seed: Iterable[int]) -> SubsetHandle:
    S = S.base if isinstance(S, InverseStructure) else S
    members = set(seed)
    gens = sorted(members)
    queue = deque(gens)
    while queue:
        a = queue.popleft()
        for g in gens:
            for p in (S.mul(a, g), S.mul(g, a)):
                if p not in members:
                    members.add(p)
                    queue.append(p)
    return SubsetHandle(S, frozenset(members))


def principal_ideals(S, e: int) -> tuple[SubsetHandle, SubsetHandle]:
    """``(eS, Se)``."""
    S = S.base if isinstance(S, InverseStructure) else S
    right = frozenset(S.mul(e, s) for s in S.elements)
    left = frozenset(S.mul(s, e) for s in S.elements)
    return SubsetHandle(S, right), SubsetHandle(S, left)


def restrict(S: FiniteSemigroup, members: Iterable[int]) -> tuple[FiniteSemigroup, list[int]]:
    """The subsemigroup on ``members`` as a standalone table, plus new->old labels."""
    old = sorted(members)
    pos = {x: i for i, x in enumerate(old)}
    try:
        table = [[pos[S.mul(a, b)] for b in old] for a in old]
    except KeyError as exc:
        raise NotSubsemigroup((None, None), exc.args[0]) from None
    names = [S.name(x) for x in old]
    return FiniteSemigroup(table, names, check=False), old


@dataclass(frozen=True)
class HomVerdict:
    """Outcome of :func:`verify_homomorphism`: ``kind`` is "mono", "hom" or "not_hom"."""

    kind: str
    witness: tuple[int, int] | None = None

    @property
    def is_hom(self) -> bool:
        return self.kind != "not_hom"

    @property
    def is_mono(self) -> bool:
        return self.kind == "mono"


def verify_homomorphism(f: Mapping[int, int] | Sequence[int], source, target) -> HomVerdict:
    source = source.base if isinstance(source, InverseStructure) else source
    target = target.base if isinstance(target, InverseStructure) else target
    get = f.__getitem__
    for a in source.elements:
        fa = get(a)
        for b in source.elements:
            if get(source.mul(a, b)) != target.mul(fa, get(b)):
                return HomVerdict("not_hom", (a, b))
    images = {get(a) for a in source.elements}
    return HomVerdict("mono" if len(images) == source.order else "hom")


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup) -> dict[int, int] | None:
    """Brute-force backtracking search for an isomorphism ``S -> T``."""
    n = S.order
    if T.order != n:
        return None

    def signature(X, x):
        sq = X.mul(x, x)
        return (sq == x, sum(1 for y in X.elements if X.mul(x, y) == x),
                sum(1 for y in X.elements if X.mul(y, x) == x))

    sig_t = [signature(T, y) for y in T.elements]
    order = sorted(S.elements, key=lambda x: -sum(1 for y in S.elements if S.mul(x, y) == x))
    f: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x):
        fx = f[x]
        for y, fy in f.items():
            for a, b in ((x, y), (y, x)):
                p = S.mul(a, b)
                if p in f and f[p] != T.mul(f[a], f[b]):
                    return False
        return T.mul(fx, fx) == f.get(S.mul(x, x), T.mul(fx, fx))

    def extend(k):
        if k == n:
            return True
        x = order[k]
        sx = signature(S, x)
        for y in T.elements:
            if y in used or sig_t[y] != sx:
                continue
            f[x] = y
            used.add(y)
            if consistent(x) and extend(k + 1):
                return True
            del f[x]
            used.discard(y)
        return False

    if extend(0) and verify_homomorphism(f, S, T).is_mono:
        return dict(f)
    return None
