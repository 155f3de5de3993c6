"""Rees matrix semigroups over zero groups, and Brandt semigroups.

A nonzero element ``(i, g, l)`` is stored at index ``1 + (i*|G| + g)*|Lambda| + l``
(positions of ``i`` and ``l`` in their index sets, group index ``g``); the zero is 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ample import AmpleReport, check_left_ample_in, check_rich, check_right_ample_in
from .core import (
    FiniteSemigroup,
    InverseFailure,
    InverseStructure,
    SubsetHandle,
    detect_inverse_structure,
    principal_ideals,
)
from .errors import InvariantViolation, IrregularMatrix, NotClosed, PreconditionFailed
from .groups import FiniteGroup
from .representations import lambda_hat, rho_hat


def _labels(spec) -> tuple:
    if isinstance(spec, int):
        return tuple(range(1, spec + 1))
    labels = tuple(spec)
    if len(set(labels)) != len(labels):
        raise ValueError("index labels must be distinct")
    return labels


class ReesMatrixSemigroup:
    """``M0(G0; I, Lambda; P)`` with ``P`` a ``Lambda x I`` matrix over ``G`` plus zero.

    Matrix entries are group element indices or ``None`` for the zero.
    """

    def __init__(self, group: FiniteGroup, I, Lambda, P: Sequence[Sequence[int | None]]):
        self.group = group
        self.I = _labels(I)
        self.Lambda = _labels(Lambda)
        if not self.I or not self.Lambda:
            raise ValueError("index sets must be non-empty")
        P = tuple(tuple(None if p is None else int(p) for p in row) for row in P)
        if len(P) != len(self.Lambda) or any(len(row) != len(self.I) for row in P):
            raise ValueError(f"sandwich matrix must be {len(self.Lambda)} x {len(self.I)}")
        for lam, row in enumerate(P):
            if all(p is None for p in row):
                raise IrregularMatrix("row", self.Lambda[lam])
        for i in range(len(self.I)):
            if all(P[lam][i] is None for lam in range(len(self.Lambda))):
                raise IrregularMatrix("column", self.I[i])
        self.P = P
        nG, nL = group.order, len(self.Lambda)
        self.triples: list = [None]
        for i in range(len(self.I)):
            for g in range(nG):
                for lam in range(nL):
                    self.triples.append((i, g, lam))
        n = len(self.triples)
        table = [[0] * n for _ in range(n)]
        for a in range(1, n):
            i, g, lam = self.triples[a]
            for b in range(1, n):
                j, h, mu = self.triples[b]
                p = P[lam][j]
                if p is not None:
                    table[a][b] = self._pos(i, group.mul(group.mul(g, p), h), mu)
        names = ["0"] + [self._name(*t) for t in self.triples[1:]]
        self.semigroup = FiniteSemigroup(table, names)

    def _pos(self, i: int, g: int, lam: int) -> int:
        return 1 + (i * self.group.order + g) * len(self.Lambda) + lam

    def _name(self, i: int, g: int, lam: int) -> str:
        return f"({self.I[i]},{self.group.name(g)},{self.Lambda[lam]})"

    def __len__(self):
        return len(self.triples)

    def element(self, i, g, lam) -> int:
        """Index of the triple given by index labels and a group element (index or name)."""
        gi = self.group.index(g) if isinstance(g, str) else int(g)
        return self._pos(self.I.index(i), gi, self.Lambda.index(lam))

    def triple(self, x: int):
        """``(i_label, g, lambda_label)`` for a nonzero element, ``None`` for 0."""
        t = self.triples[x]
        if t is None:
            return None
        return (self.I[t[0]], t[1], self.Lambda[t[2]])

    def name(self, x: int) -> str:
        return self.semigroup.name(x)


def rees_matrix(group: FiniteGroup, I, Lambda, P) -> ReesMatrixSemigroup:
    return ReesMatrixSemigroup(group, I, Lambda, P)


class BrandtSemigroup(ReesMatrixSemigroup):
    """``B(G, I) = M0(G0; I, I; Delta)``; always an inverse semigroup."""

    def __init__(self, group: FiniteGroup, I):
        labels = _labels(I)
        k = len(labels)
        delta = [[group.identity if a == b else None for b in range(k)] for a in range(k)]
        super().__init__(group, labels, labels, delta)
        res = detect_inverse_structure(self.semigroup)
        if isinstance(res, InverseFailure):
            raise InvariantViolation(f"Brandt semigroup not inverse at {self.name(res.element)}")
        self.inverse_structure: InverseStructure = res
        for x in range(1, len(self)):
            i, g, j = self.triples[x]
            expect = self._pos(j, group.inv(g), i)
            if res.inverse[x] != expect:
                raise InvariantViolation(f"inverse of {self.name(x)} is not {self.name(expect)}")

    @property
    def T(self) -> InverseStructure:
        return self.inverse_structure

    def idempotent(self, i) -> int:
        return self.element(i, self.group.identity, i)

    def nonzero_idempotents(self) -> list[int]:
        return [self.idempotent(i) for i in self.I]

    def is_zero_group(self) -> bool:
        return len(self.I) == 1


def brandt(group: FiniteGroup, I) -> BrandtSemigroup:
    return BrandtSemigroup(group, I)


def triple_members(B: ReesMatrixSemigroup, rows: Iterable, H: Iterable, cols: Iterable) -> frozenset[int]:
    G = B.group
    hs = [G.index(h) if isinstance(h, str) else int(h) for h in H]
    return frozenset([0] + [B.element(i, h, l) for i in rows for h in hs for l in cols])


def triple_subsemigroup(B: ReesMatrixSemigroup, rows: Iterable, H: Iterable, cols: Iterable) -> SubsetHandle:
    """``(rows x H x cols) u {0}``, checked for closure."""
    handle = SubsetHandle(B.semigroup, triple_members(B, rows, H, cols))
    bad = handle.closure_violation()
    if bad is not None:
        raise NotClosed(*bad)
    return handle


# --- ampleness of principal ideals and triple subsemigroups ---------------------------------

@dataclass(frozen=True)
class IdealAnalysis:
    """One principal ideal (``eB`` or ``Be``) and its one-sided ampleness verdicts."""

    kind: str
    members: frozenset[int]
    left: AmpleReport
    right: AmpleReport
    chosen: int
    chosen_collapses_to_zero: bool
    collapse: tuple[int, int] | None


@dataclass(frozen=True)
class StrictIdealPair:
    idempotent: int
    right_ideal: IdealAnalysis
    left_ideal: IdealAnalysis

    def to_dict(self, name) -> dict:
        def one(a: IdealAnalysis):
            return {
                "ideal": a.kind,
                "members": [name(x) for x in sorted(a.members)],
                "left_ample": a.left.to_dict(name),
                "right_ample": a.right.to_dict(name),
                "chosen_element": name(a.chosen),
                "chosen_collapses_to_zero": a.chosen_collapses_to_zero,
                "collapse": None if a.collapse is None else [name(x) for x in a.collapse],
            }
        return {"idempotent": name(self.idempotent), "eB": one(self.right_ideal),
                "Be": one(self.left_ideal)}


def strict_ideal_pair(B: BrandtSemigroup, e: int) -> StrictIdealPair:
    """``eB`` is left but not right ample in ``B``; ``Be`` the reverse.

    For ``eB`` the element ``(l, 1, m)`` with ``m != l`` (``e = (l, 1, l)``) gets
    the same ``lambda_hat`` map as 0; dually for ``Be`` with ``rho_hat``.
    """
    if B.is_zero_group():
        raise PreconditionFailed("B is a zero group (single index); no strict ideals exist")
    if e == 0 or e not in B.T.idempotents:
        raise PreconditionFailed(f"{B.name(e)} is not a nonzero idempotent")
    T = B.T
    lam_label = B.triple(e)[0]
    other = next(i for i in B.I if i != lam_label)
    one = B.group.identity
    eB, Be = principal_ideals(B.semigroup, e)

    u = B.element(lam_label, one, other)
    lam = lambda_hat(T, eB.sorted())
    right_ideal = IdealAnalysis(
        "eB", eB.members, check_left_ample_in(T, eB.sorted()), check_right_ample_in(T, eB.sorted()),
        u, lam.maps[u] == lam.maps[0], lam.collapsing_pair(),
    )
    v = B.element(other, one, lam_label)
    rho = rho_hat(T, Be.sorted())
    left_ideal = IdealAnalysis(
        "Be", Be.members, check_left_ample_in(T, Be.sorted()), check_right_ample_in(T, Be.sorted()),
        v, rho.maps[v] == rho.maps[0], rho.collapsing_pair(),
    )
    return StrictIdealPair(e, right_ideal, left_ideal)


@dataclass(frozen=True)
class TripleVerdict:
    """Definitional check of a triple subsemigroup against structural tests.

    ``structural`` is the group-only test (identity in ``H`` for ampleness,
    ``H`` a subgroup for richness). ``index_condition`` is the containment of
    index sets the one-sided identities also need (``rows <= cols`` on the
    left, ``cols <= rows`` on the right).
    """

    side: str
    property: str
    definitional: AmpleReport
    structural: bool
    index_condition: bool

    @property
    def agrees(self) -> bool:
        return self.definitional.holds == self.structural

    @property
    def agrees_with_indices(self) -> bool:
        return self.definitional.holds == (self.structural and self.index_condition)

    def to_dict(self, name) -> dict:
        return {"side": self.side, "property": self.property,
                "definitional": self.definitional.to_dict(name),
                "structural": self.structural, "index_condition": self.index_condition,
                "agrees": self.agrees, "agrees_with_indices": self.agrees_with_indices}


def _triple_parts(B, rows, H, cols, side):
    handle = triple_subsemigroup(B, rows, H, cols)
    hs = {B.group.index(h) if isinstance(h, str) else int(h) for h in H}
    rows, cols = set(rows), set(cols)
    index_ok = rows <= cols if side == "left" else cols <= rows
    return handle, hs, index_ok


def check_triple_ample(B: ReesMatrixSemigroup, rows, H, cols, side: str = "left") -> TripleVerdict:
    """Ampleness of ``(rows x H x cols) u {0}`` in ``B`` versus ``1 in H``."""
    handle, hs, index_ok = _triple_parts(B, rows, H, cols, side)
    check = check_left_ample_in if side == "left" else check_right_ample_in
    verdict = TripleVerdict(side, "ample", check(B.T, handle.sorted()), B.group.identity in hs, index_ok)
    if not verdict.agrees_with_indices:
        raise InvariantViolation("triple ampleness disagrees with the index/identity test")
    return verdict


def check_triple_rich(B: ReesMatrixSemigroup, rows, H, cols, side: str = "left") -> TripleVerdict:
    """Richness of ``(rows x H x cols) u {0}`` in ``B`` versus ``H`` being a subgroup."""
    handle, hs, index_ok = _triple_parts(B, rows, H, cols, side)
    verdict = TripleVerdict(side, "rich", check_rich(B.T, handle.sorted(), side),
                            B.group.is_subgroup(hs), index_ok)
    if not verdict.agrees_with_indices:
        raise InvariantViolation("triple richness disagrees with the index/subgroup test")
    return verdict


def two_index_family(G: FiniteGroup) -> dict:
    """``S = ({1,2} x G x {1,2,3}) u {0}`` inside ``B(G, {1,2,3})``.

    Checks: S is left ample; ``(3,g^-1,j)(j,g,3) = (3,1,3)`` falls outside S for
    every ``g`` and ``j in {1,2}``; S lies in no principal right ideal
    ``(i,1,i)B``.
    """
    B = brandt(G, 3)
    T = B.T
    S = triple_subsemigroup(B, (1, 2), G.elements, (1, 2, 3))
    left = check_left_ample_in(T, S.sorted())
    outside = B.idempotent(3)
    products_ok = all(
        T.mul(B.element(3, G.inv(g), j), B.element(j, g, 3)) == outside
        for g in G.elements for j in (1, 2)
    ) and outside not in S
    containing = [i for i in B.I if S.members <= principal_ideals(B.semigroup, B.idempotent(i))[0].members]
    return {
        "brandt": B,
        "subsemigroup": S,
        "left_ample": left,
        "right_ample": check_right_ample_in(T, S.sorted()),
        "dual_products_escape": products_ok,
        "outside_element": outside,
        "principal_ideals_containing": containing,
    }
