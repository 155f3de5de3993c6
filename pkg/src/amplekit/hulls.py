"""Inverse hulls and extension of an isomorphism between ample subsemigroups.

Words over ``S u S'`` are tuples of letters ``(s, inverted)`` with ``s`` in ``S``;
the letter stands for ``s`` or ``s^-1``. Given ``psi: S1 -> S2`` a letter maps
to ``psi(s)`` or ``psi(s)^-1``, and a word to the product of its letters. The
extension is well defined exactly when equal words in ``T1`` always have equal
images in ``T2``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Mapping

from .core import (
    FiniteSemigroup,
    InverseStructure,
    SubsetHandle,
    require_subsemigroup,
    restrict,
    subset,
    verify_homomorphism,
)
from .errors import InvariantViolation, NotIsomorphism, PreconditionFailed
from .ample import check_left_ample_in, check_right_ample_in, prime_members
from .representations import lambda_hat, rho_hat

Letter = tuple[int, bool]


def letter_value(T: InverseStructure, letter: Letter) -> int:
    s, inverted = letter
    return T.inv(s) if inverted else s


def word_value(T: InverseStructure, word) -> int:
    return T.base.product(letter_value(T, l) for l in word)


@dataclass(frozen=True)
class InverseHull:
    parent: InverseStructure
    seed: frozenset[int]
    members: frozenset[int]
    factorizations: Mapping[int, tuple[Letter, ...]]

    def __len__(self):
        return len(self.members)

    def handle(self) -> SubsetHandle:
        return subset(self.parent, self.members)

    def render_word(self, word) -> str:
        nm = self.parent.name
        return " ".join(f"{nm(s)}^-1" if inv else nm(s) for s, inv in word)


def _letters(S) -> list[Letter]:
    return [(s, False) for s in S] + [(s, True) for s in S]


def inverse_hull(T: InverseStructure, S) -> InverseHull:
    """Closure of ``S u S'`` under multiplication, with a shortest word for each member."""
    members = require_subsemigroup(T, S).sorted()
    words: dict[int, tuple[Letter, ...]] = {}
    queue = deque()
    letters = _letters(members)
    for l in letters:
        v = letter_value(T, l)
        if v not in words:
            words[v] = (l,)
            queue.append(v)
    while queue:
        u = queue.popleft()
        for l in letters:
            v = T.mul(u, letter_value(T, l))
            if v not in words:
                words[v] = words[u] + (l,)
                queue.append(v)
    hull = frozenset(words)
    for u in hull:
        if T.inv(u) not in hull:
            raise InvariantViolation(f"hull not closed under inversion at {T.name(u)}")
        if word_value(T, words[u]) != u:
            raise InvariantViolation(f"recorded word for {T.name(u)} multiplies out wrong")
    return InverseHull(T, frozenset(members), hull, dict(sorted(words.items())))


def prime_set(T: InverseStructure, S) -> SubsetHandle:
    members = S.sorted() if isinstance(S, SubsetHandle) else sorted(set(S))
    return subset(T, prime_members(T, members))


def generated_inverse(T: InverseStructure, S) -> SubsetHandle:
    """The inverse subsemigroup of ``T`` generated by ``S``."""
    return inverse_hull(T, S).handle()


@dataclass(frozen=True)
class ExtensionVerdict:
    consistent: bool
    witness: dict | None = None
    induced: Mapping[int, int] | None = None
    is_homomorphism: bool | None = None
    is_isomorphism: bool | None = None
    pairs: frozenset = field(default=frozenset(), repr=False, compare=False)

    def to_dict(self, T1: InverseStructure, T2: InverseStructure) -> dict:
        out = {"consistent": self.consistent,
               "condition": "holds" if self.consistent else "fails"}
        if self.witness is not None:
            w = self.witness
            render = lambda word: [f"{T1.name(s)}^-1" if inv else T1.name(s) for s, inv in word]
            out["witness"] = {
                "element": T1.name(w["element"]),
                "words": [render(w["words"][0]), render(w["words"][1])],
                "images": [T2.name(v) for v in w["images"]],
            }
        if self.induced is not None:
            out["induced"] = {T1.name(k): T2.name(v) for k, v in sorted(self.induced.items())}
            out["is_homomorphism"] = self.is_homomorphism
            out["is_isomorphism"] = self.is_isomorphism
        return out


def _check_isomorphism(T1, S1, T2, S2, psi):
    S1 = require_subsemigroup(T1, S1).sorted()
    S2 = require_subsemigroup(T2, S2).sorted()
    if set(psi) != set(S1):
        raise NotIsomorphism("mapping must be defined exactly on S1")
    if sorted(set(psi.values())) != S2 or len(S1) != len(S2):
        raise NotIsomorphism("mapping is not a bijection onto S2")
    for a in S1:
        for b in S1:
            if psi[T1.mul(a, b)] != T2.mul(psi[a], psi[b]):
                raise NotIsomorphism(f"not a homomorphism at ({T1.name(a)}, {T1.name(b)})")
    return S1, S2


def _letter_image(T2: InverseStructure, psi, letter: Letter) -> int:
    s, inverted = letter
    return T2.inv(psi[s]) if inverted else psi[s]


def extension_check(T1: InverseStructure, S1, T2: InverseStructure, S2,
                    psi: Mapping[int, int]) -> ExtensionVerdict:
    """Decide whether ``psi`` extends along words over ``S1 u S1'`` to ``V1 -> V2``.

    Image propagation is a fixed point on pairs ``(u, p)`` meaning "some word
    has value ``u`` in ``T1`` and image ``p`` in ``T2``"; breadth-first order
    keeps the recorded words shortest.
    """
    psi = {int(k): int(v) for k, v in psi.items()}
    S1, S2 = _check_isomorphism(T1, S1, T2, S2, psi)
    letters = _letters(S1)
    moves = [(letter_value(T1, l), _letter_image(T2, psi, l), l) for l in letters]
    words: dict[tuple[int, int], tuple[Letter, ...]] = {}
    queue = deque()
    for u, p, l in moves:
        if (u, p) not in words:
            words[(u, p)] = (l,)
            queue.append((u, p))
    while queue:
        u, p = queue.popleft()
        w = words[(u, p)]
        for g, q, l in moves:
            key = (T1.mul(u, g), T2.mul(p, q))
            if key not in words:
                words[key] = w + (l,)
                queue.append(key)
    images: dict[int, list[int]] = {}
    for u, p in words:
        images.setdefault(u, []).append(p)
    pairs = frozenset(words)
    for u in sorted(images):
        ps = images[u]
        if len(ps) > 1:
            p1, p2 = sorted(ps, key=lambda p: (len(words[(u, p)]), words[(u, p)]))[:2]
            return ExtensionVerdict(False, {"element": u, "words": (words[(u, p1)], words[(u, p2)]),
                                            "images": (p1, p2)}, pairs=pairs)
    induced = {u: ps[0] for u, ps in sorted(images.items())}
    V1 = sorted(induced)
    V2 = inverse_hull(T2, S2).members
    hom = all(induced[T1.mul(a, b)] == T2.mul(induced[a], induced[b]) for a in V1 for b in V1)
    if not hom:
        raise InvariantViolation("single-valued propagation produced a non-homomorphism")
    iso = len(set(induced.values())) == len(V1) and set(induced.values()) == set(V2)
    return ExtensionVerdict(True, None, induced, hom, iso, pairs)


def extension_oracle(T1: InverseStructure, S1, T2: InverseStructure, S2, psi,
                     max_length: int | None = None) -> dict[int, frozenset[int]]:
    """All (value, image) outcomes of words, enumerated length by length.

    Words of length ``k+1`` are a letter followed by a word of length ``k``.
    Runs to ``max_length`` (default ``|V1|``) and then on until no new outcome
    appears, so the result is complete.
    """
    psi = {int(k): int(v) for k, v in psi.items()}
    S1 = sorted(psi)
    base = {(letter_value(T1, l), _letter_image(T2, psi, l)) for l in _letters(S1)}
    limit = len(inverse_hull(T1, S1)) if max_length is None else max_length
    layer, seen, k = set(base), set(base), 1
    while layer:
        layer = {(T1.mul(g, u), T2.mul(q, p)) for g, q in base for u, p in layer}
        k += 1
        fresh = layer - seen
        if k > limit and not fresh:
            break
        seen |= layer
    out: dict[int, set[int]] = {}
    for u, p in seen:
        out.setdefault(u, set()).add(p)
    return {u: frozenset(ps) for u, ps in sorted(out.items())}


def brute_force_words(T1: InverseStructure, T2: InverseStructure, psi, max_length: int):
    """Literal enumeration of every word up to ``max_length``; tiny cases only."""
    letters = _letters(sorted(psi))
    out: dict[int, set[int]] = {}
    for k in range(1, max_length + 1):
        for word in iproduct(letters, repeat=k):
            u = word_value(T1, word)
            p = T2.base.product(_letter_image(T2, psi, l) for l in word)
            out.setdefault(u, set()).add(p)
    return out


@dataclass(frozen=True)
class AmalgamReport:
    extension: ExtensionVerdict
    ampleness: dict[str, bool]
    conclusion_holds: bool | None
    note: str = ("condition failing does not show that S is not a (2,1,1)-subalgebra; "
                 "it is only a sufficient condition")

    def to_dict(self, T1, T2) -> dict:
        return {"extension": self.extension.to_dict(T1, T2), "ampleness": dict(self.ampleness),
                "conclusion_holds": self.conclusion_holds, "note": self.note}


def amalgam_report(S: FiniteSemigroup, T1: InverseStructure, phi1: Mapping[int, int],
                   T2: InverseStructure, phi2: Mapping[int, int]) -> AmalgamReport:
    for label, T, phi in (("first", T1, phi1), ("second", T2, phi2)):
        verdict = verify_homomorphism(phi, S, T.base)
        if not verdict.is_mono:
            raise PreconditionFailed(f"{label} map is not a monomorphism ({verdict.kind})",
                                     side=label, witness=verdict.witness)
    S1 = sorted(phi1[x] for x in S.elements)
    S2 = sorted(phi2[x] for x in S.elements)
    if not check_left_ample_in(T1, S1):
        raise PreconditionFailed("image in the first oversemigroup is not left ample", side="first")
    if not check_right_ample_in(T2, S2):
        raise PreconditionFailed("image in the second oversemigroup is not right ample", side="second")
    psi = {phi1[x]: phi2[x] for x in S.elements}
    ext = extension_check(T1, S1, T2, S2, psi)
    amp = {
        "first_left": bool(check_left_ample_in(T1, S1)),
        "first_right": bool(check_right_ample_in(T1, S1)),
        "second_left": bool(check_left_ample_in(T2, S2)),
        "second_right": bool(check_right_ample_in(T2, S2)),
    }
    conclusion = all(amp.values()) if ext.consistent else None
    return AmalgamReport(ext, amp, conclusion)


def hat_amalgam(T: InverseStructure, S, limit: int | None = None):
    """``(U, T1, phi1, T2, phi2)`` for the amalgam of ``rho_hat`` and ``lambda_hat``.

    ``U`` is ``S`` as a standalone semigroup. ``T1``/``T2`` are the inverse
    subsemigroups of ``I_S`` generated by the two images (``T2`` with the
    left-action product); ampleness and hulls inside them agree with those in
    ``I_S``.
    """
    members = require_subsemigroup(T, S).sorted()
    U, labels = restrict(T.base, members)
    rho, lam = rho_hat(T, members), lambda_hat(T, members)
    for label, rep in (("first", rho), ("second", lam)):
        if not rep.is_injective:
            a, b = rep.collapsing_pair()
            raise PreconditionFailed(f"{rep.kind} is not injective", side=label, witness=(a, b))
    T1, m1 = rho.target(limit)
    T2, m2 = lam.target(limit)
    phi1 = {i: m1[old] for i, old in enumerate(labels)}
    phi2 = {i: m2[old] for i, old in enumerate(labels)}
    return U, T1, phi1, T2, phi2
