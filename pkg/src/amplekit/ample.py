"""Ampleness of a subsemigroup ``S`` inside a given inverse semigroup ``T``.

Every check is relative to the supplied ``T``. Reports carry the unary map
(``x -> xx^-1`` or ``x -> x^-1x``) or the factor assignments when a property
holds, and a counterexample when it fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .core import (
    FiniteSemigroup,
    InverseStructure,
    principal_ideals,
    require_subsemigroup,
    verify_homomorphism,
)
from .errors import InvariantViolation, PreconditionFailed, RichnessRequired
from .representations import TheoremVerdict, lambda_hat, rho_hat

LEFT_AMPLE = "LeftAmple"
RIGHT_AMPLE = "RightAmple"
FULL = "Full"
RICH_LEFT = "RichLeft"
RICH_RIGHT = "RichRight"
ULTRA_RICH_LEFT = "UltraRichLeft"
ULTRA_RICH_RIGHT = "UltraRichRight"


@dataclass(frozen=True)
class AmpleReport:
    property: str
    holds: bool
    witness: Mapping = field(default_factory=dict)
    counterexample: tuple | None = None

    def __bool__(self):
        return self.holds

    def to_dict(self, name=str) -> dict:
        def fmt(v):
            if isinstance(v, tuple):
                return [fmt(u) for u in v]
            return name(v)

        out = {"property": self.property, "holds": self.holds}
        if self.witness:
            out["witness"] = {
                (",".join(fmt(k)) if isinstance(k, tuple) else fmt(k)): fmt(v)
                for k, v in sorted(self.witness.items())
            }
        if self.counterexample is not None:
            out["counterexample"] = fmt(self.counterexample)
        return out


def _sub(T, S):
    return require_subsemigroup(T, S).sorted()


def prime_members(T: InverseStructure, S) -> frozenset[int]:
    """``{s^-1 : s in S}``."""
    return frozenset(T.inv(s) for s in S)


def _unary_check(T: InverseStructure, S, op, prop) -> AmpleReport:
    members = _sub(T, S)
    Sset = set(members)
    wit = {}
    for x in members:
        v = op(x)
        if v not in Sset:
            return AmpleReport(prop, False, counterexample=(x, v))
        wit[x] = v
    return AmpleReport(prop, True, wit)


def check_left_ample_in(T: InverseStructure, S) -> AmpleReport:
    """Holds iff ``xx^-1`` lies in ``S`` for every ``x`` in ``S``; witness is ``x -> x^+``."""
    return _unary_check(T, S, T.plus, LEFT_AMPLE)


def check_right_ample_in(T: InverseStructure, S) -> AmpleReport:
    return _unary_check(T, S, T.star, RIGHT_AMPLE)


def check_full(T: InverseStructure, S) -> AmpleReport:
    members = set(_sub(T, S))
    missing = sorted(T.idempotents - members)
    if missing:
        return AmpleReport(FULL, False, counterexample=(missing[0],))
    if not (check_left_ample_in(T, members) and check_right_ample_in(T, members)):
        raise InvariantViolation("full subsemigroup failed an ampleness check")
    return AmpleReport(FULL, True)


def _rich_data(T: InverseStructure, S, side: str):
    members = _sub(T, S)
    both = sorted(set(members) | prime_members(T, members))
    pool = set(both)
    if side == "left":
        def value(x, y):
            return T.mul(x, T.inv(y))

        def factored(a, x, y):
            return T.mul(a, T.plus(y))
    elif side == "right":
        def value(x, y):
            return T.mul(T.inv(x), y)

        def factored(b, x, y):
            return T.mul(T.star(x), b)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return members, both, pool, value, factored


def check_rich(T: InverseStructure, S, side: str = "left") -> AmpleReport:
    """Rich left: ``xy^-1`` in ``S u S'`` for all ``x, y``; rich right: ``x^-1y``.

    On success ``witness[(x, y)]`` is the first ``a`` in ``S u S'`` with
    ``xy^-1 = a y^+`` (left) or ``x^-1 y = x^* a`` (right).
    """
    members, both, pool, value, factored = _rich_data(T, S, side)
    prop = RICH_LEFT if side == "left" else RICH_RIGHT
    for x in members:
        for y in members:
            v = value(x, y)
            if v not in pool:
                return AmpleReport(prop, False, counterexample=(x, y, v))
    factors = {}
    for x in members:
        for y in members:
            v = value(x, y)
            a = next((a for a in both if factored(a, x, y) == v), None)
            if a is None:
                raise InvariantViolation(f"no factor for pair {(x, y)} although the product lies in S u S'")
            factors[(x, y)] = a
    one_sided = check_left_ample_in(T, members) if side == "left" else check_right_ample_in(T, members)
    if not one_sided:
        raise InvariantViolation(f"rich {side} ample subsemigroup is not {side} ample")
    return AmpleReport(prop, True, factors)


def check_ultra_rich(T: InverseStructure, S, side: str = "left") -> AmpleReport:
    if not check_rich(T, S, side):
        raise RichnessRequired(f"S is not rich {side} ample in T")
    members, both, pool, value, factored = _rich_data(T, S, side)
    prop = ULTRA_RICH_LEFT if side == "left" else ULTRA_RICH_RIGHT
    factors = {}
    for x in members:
        for y in members:
            v = value(x, y)
            found = [a for a in both if factored(a, x, y) == v]
            if len(found) != 1:
                return AmpleReport(prop, False, counterexample=(x, y, found[0], found[1]))
            factors[(x, y)] = found[0]
    return AmpleReport(prop, True, factors)


def two_condition_rich(T: InverseStructure, S, side: str = "left") -> bool:
    """Richness tested the other way: one-sided ampleness plus existence of factors."""
    members, both, pool, value, factored = _rich_data(T, S, side)
    one = check_left_ample_in if side == "left" else check_right_ample_in
    if not one(T, members):
        return False
    return all(any(factored(a, x, y) == value(x, y) for a in both)
               for x in members for y in members)


@dataclass(frozen=True)
class StrictEvidence:
    """Evidence that ``S`` is strict left (or right) ample, relative to one ``T``.

    ``own_side`` is whether the image of the matching hat representation is
    ample on that side in ``I_S``. ``other_side_blocked`` is whether the other
    hat representation is not injective or its image is not ample on the other
    side. This only speaks about the supplied ``T``; it does not range over
    every inverse oversemigroup.
    """

    side: str
    own_side: bool
    other_injective: bool
    other_collapse: tuple[int, int] | None
    other_image_ample: bool | None
    scope: str = "relative to the supplied oversemigroup only"

    @property
    def other_side_blocked(self) -> bool:
        return (not self.other_injective) or not self.other_image_ample

    def to_dict(self, name=str) -> dict:
        return {
            "side": self.side,
            "own_image_ample": self.own_side,
            "other_injective": self.other_injective,
            "other_collapse": None if self.other_collapse is None else [name(v) for v in self.other_collapse],
            "other_image_ample": self.other_image_ample,
            "other_side_blocked": self.other_side_blocked,
            "scope": self.scope,
        }


def strict_left_evidence(T: InverseStructure, S) -> StrictEvidence:
    members = _sub(T, S)
    rho = rho_hat(T, members)
    lam = lambda_hat(T, members)
    own = rho.is_injective and rho.image_left_ample_failure() is None
    return StrictEvidence(
        "left", own, lam.is_injective, lam.collapsing_pair(),
        lam.image_right_ample_failure() is None,
    )


def strict_right_evidence(T: InverseStructure, S) -> StrictEvidence:
    members = _sub(T, S)
    rho = rho_hat(T, members)
    lam = lambda_hat(T, members)
    own = lam.is_injective and lam.image_right_ample_failure() is None
    return StrictEvidence(
        "right", own, rho.is_injective, rho.collapsing_pair(),
        rho.image_left_ample_failure() is None,
    )


def central_idempotent_witness(S):
    """``(e, s)`` with ``e`` idempotent and ``es != se``, or ``None``."""
    S = S.base if isinstance(S, InverseStructure) else S
    for e in sorted(S.idempotents()):
        for s in S.elements:
            if S.mul(e, s) != S.mul(s, e):
                return (e, s)
    return None


def check_central_idempotents(S) -> bool:
    return central_idempotent_witness(S) is None


def check_principal_ideal_balance(S: FiniteSemigroup, T1: InverseStructure, phi1: Mapping[int, int],
                                  T2: InverseStructure, phi2: Mapping[int, int]) -> TheoremVerdict:
    """``S`` embedded left ample in ``T1`` and right ample in ``T2``, with ``|eS| = |Se|``
    for every idempotent ``e``: the hat images must then be ample on both sides.

    Requires ``S`` finite (which it is here).
    """
    for label, T, phi in (("left", T1, phi1), ("right", T2, phi2)):
        verdict = verify_homomorphism(phi, S, T.base)
        if not verdict.is_mono:
            raise PreconditionFailed(f"{label} map is not a monomorphism ({verdict.kind})", side=label,
                                     witness=verdict.witness)
    S1 = sorted(phi1[x] for x in S.elements)
    S2 = sorted(phi2[x] for x in S.elements)
    rep = check_left_ample_in(T1, S1)
    if not rep:
        return TheoremVerdict("hypothesis_fails", "not left ample in the first oversemigroup",
                              rep.counterexample, {"side": "left"})
    rep = check_right_ample_in(T2, S2)
    if not rep:
        return TheoremVerdict("hypothesis_fails", "not right ample in the second oversemigroup",
                              rep.counterexample, {"side": "right"})
    for e in sorted(S.idempotents()):
        eS, Se = principal_ideals(S, e)
        if len(eS) != len(Se):
            return TheoremVerdict("hypothesis_fails", "|eS| != |Se|", e,
                                  {"eS": eS.sorted(), "Se": Se.sorted()})
    back1 = {phi1[x]: x for x in S.elements}
    back2 = {phi2[x]: x for x in S.elements}
    rho = rho_hat(T1, S1)
    lam = lambda_hat(T2, S2)
    bad = rho.image_right_ample_failure()
    if bad is not None:
        return TheoremVerdict("conclusion_fails", "sigma_x^-1 sigma_x outside the rho_hat image", back1[bad])
    bad = lam.image_left_ample_failure()
    if bad is not None:
        return TheoremVerdict("conclusion_fails", "identity on xS outside the lambda_hat image", back2[bad])
    return TheoremVerdict("holds", details={"central_idempotents": check_central_idempotents(S)})
