"""Zigzag certificates for membership in a dominion, and the generated inverse subsemigroup.

A certificate of length ``k`` over ``S`` consists of ``a_0..a_2k`` in ``S`` and
``x_1..x_k``, ``y_1..y_k`` in ``T``; it claims

    d = a_0 y_1 = x_1 a_1 y_1 = x_1 a_2 y_2 = x_2 a_3 y_2 = ... = x_k a_2k.

Length 0 is the trivial certificate ``d = a_0``. Computing the dominion
itself is not attempted.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FiniteSemigroup, InverseStructure
from .errors import MalformedCertificate
from .hulls import generated_inverse  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class ZigzagCertificate:
    value: int
    a: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.x)

    def check_shape(self):
        k = len(self.x)
        if len(self.y) != k:
            raise MalformedCertificate(f"{len(self.x)} x-factors but {len(self.y)} y-factors")
        if len(self.a) != 2 * k + 1:
            raise MalformedCertificate(f"length {k} needs {2 * k + 1} spine elements, got {len(self.a)}")

    def chain(self) -> list[tuple[int, ...]]:
        """The words whose products must all equal the value."""
        self.check_shape()
        k, a, x, y = self.length, self.a, self.x, self.y
        if k == 0:
            return [(a[0],)]
        words = [(a[0], y[0])]
        for i in range(1, k + 1):
            words.append((x[i - 1], a[2 * i - 1], y[i - 1]))
            if i < k:
                words.append((x[i - 1], a[2 * i], y[i]))
        words.append((x[k - 1], a[2 * k]))
        return words

    def to_json(self, S: FiniteSemigroup | None = None) -> str:
        nm = S.name if S is not None else (lambda v: v)
        return json.dumps({"value": nm(self.value), "a": [nm(v) for v in self.a],
                           "x": [nm(v) for v in self.x], "y": [nm(v) for v in self.y]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str, S: FiniteSemigroup):
        try:
            data = json.loads(text)
            cert = cls(S.index(data["value"]), tuple(S.index(v) for v in data["a"]),
                       tuple(S.index(v) for v in data.get("x", [])),
                       tuple(S.index(v) for v in data.get("y", [])))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise MalformedCertificate(f"cannot read certificate: {exc}") from None
        cert.check_shape()
        return cert


@dataclass(frozen=True)
class ZigzagResult:
    valid: bool
    failing_link: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.valid


def verify_zigzag(T, S, cert: ZigzagCertificate) -> ZigzagResult:
    """Check every spine element lies in ``S`` and every chain product equals the value.

    ``failing_link`` is the position in :meth:`ZigzagCertificate.chain` of the
    first product that differs from the value (membership failures report
    position ``None``).
    """
    T = T.base if isinstance(T, InverseStructure) else T
    members = set(S)
    words = cert.chain()
    for v in (cert.value, *cert.a, *cert.x, *cert.y):
        if not 0 <= v < T.order:
            raise MalformedCertificate(f"element {v} outside the semigroup")
    for i, v in enumerate(cert.a):
        if v not in members:
            return ZigzagResult(False, None, f"a_{i} = {T.name(v)} is not in S")
    for idx, w in enumerate(words):
        if T.product(w) != cert.value:
            return ZigzagResult(False, idx, f"link {idx} multiplies to {T.name(T.product(w))}")
    return ZigzagResult(True)
