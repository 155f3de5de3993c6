"""Representations of inverse semigroups (and their subsemigroups) by partial bijections.

Right translations ``rho_x: a -> a x`` compose as right actions, so ``x -> rho_x`` is
a homomorphism into ``I_T`` with the usual right-action product. Left translations
``lambda_x: a -> x a`` satisfy ``lambda_x lambda_y = lambda_(yx)`` under that
product; they are homomorphic for the left-action product ``beta o gamma``
(apply ``gamma`` first). A :class:`Representation` records which product its
target uses in ``action``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .core import (
    FiniteSemigroup,
    HomVerdict,
    InverseStructure,
    SubsetHandle,
    require_subsemigroup,
    restrict,
)
from .errors import InvariantViolation, NotInvariant, PreconditionFailed
from .partial import PartialBijection, compose, generated_concrete, invert

EXHAUSTIVE_LIMIT = 7
DEFAULT_SEED = 0


@dataclass(frozen=True)
class Representation:
    """``maps[s]`` is the partial bijection of ``ground`` assigned to element ``s``.

    Ground point ``p`` stands for element ``ground[p]`` of :attr:`source`.
    """

    source: FiniteSemigroup
    domain: tuple[int, ...]
    ground: tuple[int, ...]
    maps: Mapping[int, PartialBijection]
    action: str = "right"
    kind: str = ""
    notes: dict = field(default_factory=dict, compare=False)

    @property
    def m(self) -> int:
        return len(self.ground)

    def point(self, element: int) -> int:
        return self.ground.index(element)

    def mul(self, b: PartialBijection, c: PartialBijection) -> PartialBijection:
        """Product in the target symmetric inverse semigroup."""
        return compose(b, c) if self.action == "right" else compose(c, b)

    def target_plus(self, b: PartialBijection) -> PartialBijection:
        return self.mul(b, invert(b))

    def target_star(self, b: PartialBijection) -> PartialBijection:
        return self.mul(invert(b), b)

    def image(self) -> frozenset[PartialBijection]:
        return frozenset(self.maps.values())

    def collapsing_pair(self) -> tuple[int, int] | None:
        seen: dict[PartialBijection, int] = {}
        for s in self.domain:
            b = self.maps[s]
            if b in seen:
                return (seen[b], s)
            seen[b] = s
        return None

    @property
    def is_injective(self) -> bool:
        return self.collapsing_pair() is None

    def homomorphism_verdict(self) -> HomVerdict:
        dom = set(self.domain)
        for s in self.domain:
            for t in self.domain:
                st = self.source.mul(s, t)
                if st in dom and self.mul(self.maps[s], self.maps[t]) != self.maps[st]:
                    return HomVerdict("not_hom", (s, t))
        return HomVerdict("mono" if self.is_injective else "hom")

    def image_left_ample_failure(self):
        """Element whose image ``b`` has ``b b^-1`` (target product) outside the image."""
        img = self.image()
        for s in self.domain:
            if self.target_plus(self.maps[s]) not in img:
                return s
        return None

    def image_right_ample_failure(self):
        img = self.image()
        for s in self.domain:
            if self.target_star(self.maps[s]) not in img:
                return s
        return None

    def preimage(self, b: PartialBijection) -> int | None:
        for s in self.domain:
            if self.maps[s] == b:
                return s
        return None

    def target(self, limit: int | None = None) -> tuple[InverseStructure, dict[int, int]]:
        """The inverse subsemigroup of ``I_ground`` generated by the image.

        Returns its abstraction (multiplying with this representation's product)
        and the element map ``s -> index``.
        """
        C = generated_concrete(self.image(), limit=limit)
        T = C.abstraction
        if self.action == "left":
            T = opposite(T)
        return T, {s: C.index[self.maps[s]] for s in self.domain}

    def relabel(self, element: int) -> str:
        return self.source.name(element)

    def render(self) -> dict[str, dict[str, str]]:
        nm = self.source.name
        return {
            nm(s): {nm(self.ground[x]): nm(self.ground[y]) for x, y in self.maps[s].pairs().items()}
            for s in self.domain
        }


def opposite(T: InverseStructure) -> InverseStructure:
    """Same elements, multiplication ``a * b := b a``."""
    base = FiniteSemigroup(T.base.table.T.copy(), T.base.names, check=False)
    return InverseStructure(base, T.inverse, T.idempotents)


def _members(S) -> tuple[int, ...]:
    if isinstance(S, SubsetHandle):
        return tuple(S.sorted())
    return tuple(sorted(set(S)))


def _translation(T: InverseStructure, x: int, ground: tuple[int, ...], side: str) -> PartialBijection:
    pos = {a: p for p, a in enumerate(ground)}
    images = [-1] * len(ground)
    if side == "right":
        e = T.plus(x)
        for p, a in enumerate(ground):
            if T.mul(a, e) == a:
                images[p] = pos.get(T.mul(a, x), -2)
    else:
        e = T.star(x)
        for p, a in enumerate(ground):
            if T.mul(e, a) == a:
                images[p] = pos.get(T.mul(x, a), -2)
    if -2 in images:
        p = images.index(-2)
        a = ground[p]
        raise NotInvariant(x, a, T.mul(a, x) if side == "right" else T.mul(x, a))
    return PartialBijection(len(ground), tuple(images))


def _check_wagner_preston(T: InverseStructure, rep: Representation) -> None:
    side = rep.action
    for x in T.elements:
        b = rep.maps[x]
        if side == "right":
            want_dom = {a for a in T.elements if T.mul(a, T.plus(x)) == a}
            want_img = {a for a in T.elements if T.mul(a, T.star(x)) == a}
        else:
            want_dom = {a for a in T.elements if T.mul(T.star(x), a) == a}
            want_img = {a for a in T.elements if T.mul(T.plus(x), a) == a}
        got_dom = {rep.ground[p] for p in b.domain}
        got_img = {rep.ground[p] for p in b.image}
        if got_dom != want_dom or got_img != want_img:
            raise InvariantViolation(f"translation by {T.name(x)} has wrong domain or image")
    verdict = rep.homomorphism_verdict()
    if not verdict.is_mono:
        raise InvariantViolation(f"Wagner-Preston map is {verdict.kind}, witness {verdict.witness}")


def wagner_preston_rho(T: InverseStructure) -> Representation:
    ground = tuple(T.elements)
    maps = {x: _translation(T, x, ground, "right") for x in T.elements}
    rep = Representation(T.base, ground, ground, maps, "right", "rho")
    _check_wagner_preston(T, rep)
    return rep


def wagner_preston_lambda(T: InverseStructure) -> Representation:
    ground = tuple(T.elements)
    maps = {x: _translation(T, x, ground, "left") for x in T.elements}
    rep = Representation(T.base, ground, ground, maps, "left", "lambda")
    _check_wagner_preston(T, rep)
    return rep


def domain_identities_failure(T: InverseStructure):
    """First ``t`` violating one of the four ideal identities, with which one, else ``None``.

    ``T tt^-1 = T t^-1``, ``T t^-1 t = T t``, ``t^-1 t T = t^-1 T``, ``t t^-1 T = t T``.
    """
    def L(x):
        return frozenset(T.mul(a, x) for a in T.elements)

    def R(x):
        return frozenset(T.mul(x, a) for a in T.elements)

    for t in T.elements:
        ti = T.inv(t)
        checks = (
            ("T t t^-1 = T t^-1", L(T.plus(t)), L(ti)),
            ("T t^-1 t = T t", L(T.star(t)), L(t)),
            ("t^-1 t T = t^-1 T", R(T.star(t)), R(ti)),
            ("t t^-1 T = t T", R(T.plus(t)), R(t)),
        )
        for label, lhs, rhs in checks:
            if lhs != rhs:
                return t, label
    return None


def is_right_invariant(T: InverseStructure, S, Y) -> bool:
    Y = set(_members(Y))
    for s in _members(S):
        e = T.plus(s)
        for a in Y:
            if T.mul(a, e) == a and T.mul(a, s) not in Y:
                return False
    return True


def is_left_invariant(T: InverseStructure, S, Y) -> bool:
    Y = set(_members(Y))
    for s in _members(S):
        e = T.star(s)
        for a in Y:
            if T.mul(e, a) == a and T.mul(s, a) not in Y:
                return False
    return True


def restricted_rep(T: InverseStructure, S, Y) -> Representation:
    """``s -> rho_s`` restricted to ``T ss^-1 n Y``, as maps of ``Y``."""
    S = require_subsemigroup(T, S)
    ground = _members(Y)
    maps = {s: _translation(T, s, ground, "right") for s in S.sorted()}
    return Representation(T.base, tuple(S.sorted()), ground, maps, "right", "restricted")


def restricted_lambda_rep(T: InverseStructure, S, Y) -> Representation:
    S = require_subsemigroup(T, S)
    ground = _members(Y)
    maps = {s: _translation(T, s, ground, "left") for s in S.sorted()}
    return Representation(T.base, tuple(S.sorted()), ground, maps, "left", "restricted_lambda")


def is_left_ample_members(T: InverseStructure, S) -> bool:
    Sset = set(_members(S))
    return all(T.plus(x) in Sset for x in Sset)


def is_right_ample_members(T: InverseStructure, S) -> bool:
    Sset = set(_members(S))
    return all(T.star(x) in Sset for x in Sset)


def _ideal_identity_failure(T: InverseStructure, S, side: str):
    # left: S xx^-1 = T xx^-1 n S; right: x^-1x S = x^-1x T n S
    Sset = _members(S)
    for x in Sset:
        if side == "left":
            e = T.plus(x)
            lhs = {T.mul(u, e) for u in Sset}
            rhs = {T.mul(a, e) for a in T.elements} & set(Sset)
        else:
            e = T.star(x)
            lhs = {T.mul(e, u) for u in Sset}
            rhs = {T.mul(e, a) for a in T.elements} & set(Sset)
        if lhs != rhs:
            return x
    return None


def rho_hat(T: InverseStructure, S) -> Representation:
    """``S -> I_S``, ``s -> rho_s`` restricted to ``T ss^-1 n S``.

    When ``S`` is left ample in ``T`` the result must be an embedding whose
    image is left ample in ``I_S``; that is verified here. Otherwise a
    non-injective outcome is legitimate and reported via ``collapsing_pair``.
    """
    rep = restricted_rep(T, S, _members(S))
    left = is_left_ample_members(T, rep.domain)
    if left:
        if not rep.is_injective:
            raise InvariantViolation(f"rho_hat not injective on left ample S: {rep.collapsing_pair()}")
        if rep.image_left_ample_failure() is not None:
            raise InvariantViolation("rho_hat image is not left ample")
        bad = _ideal_identity_failure(T, rep.domain, "left")
        if bad is not None:
            raise InvariantViolation(f"S xx^-1 != T xx^-1 n S at {T.name(bad)}")
    return Representation(rep.source, rep.domain, rep.ground, rep.maps, "right", "rho_hat",
                          {"left_ample_in_T": left, "embedding": rep.is_injective})


def lambda_hat(T: InverseStructure, S) -> Representation:
    """``S -> I_S``, ``s -> lambda_s`` restricted to ``s^-1 s T n S`` (left-action product)."""
    rep = restricted_lambda_rep(T, S, _members(S))
    right = is_right_ample_members(T, rep.domain)
    if right:
        if not rep.is_injective:
            raise InvariantViolation(f"lambda_hat not injective on right ample S: {rep.collapsing_pair()}")
        if rep.image_right_ample_failure() is not None:
            raise InvariantViolation("lambda_hat image is not right ample")
        bad = _ideal_identity_failure(T, rep.domain, "right")
        if bad is not None:
            raise InvariantViolation(f"x^-1x S != x^-1x T n S at {T.name(bad)}")
    return Representation(rep.source, rep.domain, rep.ground, rep.maps, "left", "lambda_hat",
                          {"right_ample_in_T": right, "embedding": rep.is_injective})


def intrinsic_rho(U: FiniteSemigroup, plus: Mapping[int, int]) -> Representation:
    """``x -> (z -> z x)`` on ``U x^+``, using only ``U``'s product and the ``+`` map."""
    ground = tuple(U.elements)
    maps = {}
    for x in U.elements:
        dom = {U.mul(u, plus[x]) for u in U.elements}
        maps[x] = PartialBijection.from_pairs(len(ground), ((z, U.mul(z, x)) for z in sorted(dom)))
    return Representation(U, ground, ground, maps, "right", "intrinsic_rho")


def intrinsic_lambda(U: FiniteSemigroup, star: Mapping[int, int]) -> Representation:
    """``u -> (x -> u x)`` on ``u^* U``."""
    ground = tuple(U.elements)
    maps = {}
    for u in U.elements:
        dom = {U.mul(star[u], x) for x in U.elements}
        maps[u] = PartialBijection.from_pairs(len(ground), ((x, U.mul(u, x)) for x in sorted(dom)))
    return Representation(U, ground, ground, maps, "left", "intrinsic_lambda")


def intrinsic_matches(T: InverseStructure, S, side: str = "left") -> bool:
    """Does the construction from ``+`` (or ``*``) alone reproduce ``rho_hat`` (or ``lambda_hat``)?"""
    U, labels = restrict(T.base, _members(S))
    back = {old: new for new, old in enumerate(labels)}
    if side == "left":
        unary = {back[x]: back[T.plus(x)] for x in labels}
        mine, theirs = intrinsic_rho(U, unary), rho_hat(T, labels)
    else:
        unary = {back[x]: back[T.star(x)] for x in labels}
        mine, theirs = intrinsic_lambda(U, unary), lambda_hat(T, labels)
    # both act on points 0..|S|-1 listing S in increasing order
    return all(mine.maps[back[s]] == theirs.maps[s] for s in labels)


def sigma_idempotent_identity(T: InverseStructure, S) -> dict:
    """For left ample ``S``: ``(rho_s rho_s^-1) theta = sigma_s sigma_s^-1 = sigma_(ss^-1)``.

    ``theta`` sends ``rho_s`` (Wagner-Preston image) to ``sigma_s``. Returns
    ``{"holds": bool, "failures": [...]}``; raises if ``S`` is not left ample.
    """
    members = _members(S)
    if not is_left_ample_members(T, members):
        bad = next(x for x in members if T.plus(x) not in set(members))
        raise PreconditionFailed(f"S is not left ample in T: {T.name(bad)}^+ lies outside S",
                                 side="left", witness=bad)
    rho = wagner_preston_rho(T)
    by_map = {b: x for x, b in rho.maps.items()}
    hat = rho_hat(T, members)
    failures = []
    for s in members:
        sig = hat.maps[s]
        lhs = compose(sig, invert(sig))
        e = hat.source.mul(s, T.inv(s))
        if lhs != hat.maps[e]:
            failures.append({"s": s, "reason": "sigma_s sigma_s^-1 != sigma_(ss^-1)"})
            continue
        rr = compose(rho.maps[s], invert(rho.maps[s]))
        pre = by_map.get(rr)
        if pre is None or pre not in hat.maps or hat.maps[pre] != lhs:
            failures.append({"s": s, "reason": "theta(rho_s rho_s^-1) != sigma_s sigma_s^-1"})
    return {"holds": not failures, "failures": failures}


@dataclass(frozen=True)
class TheoremVerdict:
    """``status`` is "holds", "hypothesis_fails" or "conclusion_fails"."""

    status: str
    reason: str = ""
    witness: object = None
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == "holds"


def check_two_sided_rho_hat(T: InverseStructure, S) -> TheoremVerdict:
    """If ``S`` is ample in ``T`` and ``T s^-1 s n S = S s`` for all ``s``, the image of
    ``rho_hat`` must be both left and right ample in ``I_S``."""
    members = _members(S)
    Sset = set(members)
    for x in members:
        if T.plus(x) not in Sset:
            return TheoremVerdict("hypothesis_fails", "not left ample", x)
        if T.star(x) not in Sset:
            return TheoremVerdict("hypothesis_fails", "not right ample", x)
    for s in members:
        e = T.star(s)
        lhs = {T.mul(a, e) for a in T.elements} & Sset
        rhs = {T.mul(u, s) for u in members}
        if lhs != rhs:
            return TheoremVerdict("hypothesis_fails", "T s^-1 s n S != S s", s,
                                  {"T s^-1 s n S": sorted(lhs), "S s": sorted(rhs)})
    rep = rho_hat(T, members)
    bad = rep.image_left_ample_failure()
    if bad is not None:
        return TheoremVerdict("conclusion_fails", "image not left ample", bad)
    bad = rep.image_right_ample_failure()
    if bad is not None:
        return TheoremVerdict("conclusion_fails", "image not right ample", bad)
    return TheoremVerdict("holds")


def right_invariant_subsets(T: InverseStructure, S) -> list[frozenset[int]]:
    """Every right ``S``-invariant subset of ``T`` (exhaustive; small ``T`` only)."""
    if T.order > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration capped at |T| <= {EXHAUSTIVE_LIMIT}")
    out = []
    elems = list(T.elements)
    for k in range(len(elems) + 1):
        for Y in combinations(elems, k):
            if is_right_invariant(T, S, Y):
                out.append(frozenset(Y))
    return out


def right_invariant_closure(T: InverseStructure, S, seed: Iterable[int]) -> frozenset[int]:
    members = _members(S)
    Y = set(seed)
    stack = list(Y)
    while stack:
        a = stack.pop()
        for s in members:
            if T.mul(a, T.plus(s)) == a:
                b = T.mul(a, s)
                if b not in Y:
                    Y.add(b)
                    stack.append(b)
    return frozenset(Y)


def sample_right_invariant_subsets(T: InverseStructure, S, count: int,
                                   seed: int = DEFAULT_SEED) -> list[frozenset[int]]:
    """Random seeds closed up to right invariance; deterministic for a fixed ``seed``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        mask = rng.random(T.order) < rng.random()
        out.append(right_invariant_closure(T, S, np.flatnonzero(mask).tolist()))
    return out


def invariant_subsets(T: InverseStructure, S, count: int = 64, seed: int = DEFAULT_SEED):
    if T.order <= EXHAUSTIVE_LIMIT:
        return right_invariant_subsets(T, S)
    return sample_right_invariant_subsets(T, S, count, seed)


def restriction_is_homomorphic(T: InverseStructure, S, Y):
    """``sigma_s sigma_t = sigma_(st)`` for all ``s, t`` in ``S``; first failing pair or ``None``."""
    rep = restricted_rep(T, S, Y)
    for s in rep.domain:
        for t in rep.domain:
            if compose(rep.maps[s], rep.maps[t]) != rep.maps[T.mul(s, t)]:
                return (s, t)
    return None
