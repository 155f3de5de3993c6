import json

import pytest

from amplekit.dominion import ZigzagCertificate, generated_inverse, verify_zigzag
from amplekit.errors import MalformedCertificate
from amplekit.hulls import inverse_hull

from conftest import idx

FULL = ("0", "(1,1,1)", "(2,1,2)", "(1,1,2)")


def _cert(B, value, a, x, y):
    n = B.semigroup.index
    return ZigzagCertificate(n(value), tuple(map(n, a)), tuple(map(n, x)), tuple(map(n, y)))


def test_generated_inverse_examples(B2):
    T = B2.T
    E = sorted(T.idempotents)
    assert generated_inverse(T, E).sorted() == E
    eB = idx(B2, "0", "(1,1,1)", "(1,1,2)")
    assert generated_inverse(T, eB).sorted() == list(T.elements)
    assert generated_inverse(T, list(T.elements)).sorted() == list(T.elements)
    assert generated_inverse(T, eB).members == inverse_hull(T, eB).members


def test_trivial_certificate(B2):
    d = idx(B2, "(1,1,2)")[0]
    cert = ZigzagCertificate(d, (d,), (), ())
    assert verify_zigzag(B2.T, idx(B2, *FULL), cert)


def test_length_one_certificate(B2):
    cert = _cert(B2, "(1,1,2)", ["(1,1,1)", "(1,1,1)", "(1,1,2)"], ["(1,1,1)"], ["(1,1,2)"])
    res = verify_zigzag(B2.T, idx(B2, *FULL), cert)
    assert res.valid and res.failing_link is None
    T = B2.T
    assert T.mul(cert.a[0], cert.y[0]) == cert.value == T.mul(cert.x[-1], cert.a[-1])


def test_corrupted_link_is_located(B2):
    cert = _cert(B2, "(1,1,2)", ["(1,1,1)", "(2,1,2)", "(1,1,2)"], ["(1,1,1)"], ["(1,1,2)"])
    res = verify_zigzag(B2.T, idx(B2, *FULL), cert)
    assert not res.valid and res.failing_link == 1


def test_length_two_chain_shape(B2):
    # a_i = 10+i, x_i = 20+i, y_i = 30+i only to read off the positions
    cert = ZigzagCertificate(0, (10, 11, 12, 13, 14), (21, 22), (31, 32))
    assert cert.chain() == [(10, 31), (21, 11, 31), (21, 12, 32), (22, 13, 32), (22, 14)]


def test_membership_failure(B2):
    cert = _cert(B2, "(2,1,1)", ["(2,1,1)"], [], [])
    res = verify_zigzag(B2.T, idx(B2, *FULL), cert)
    assert not res.valid and res.failing_link is None and "not in S" in res.reason


def test_malformed(B2):
    with pytest.raises(MalformedCertificate):
        ZigzagCertificate(1, (1, 1), (1,), (1,)).chain()
    with pytest.raises(MalformedCertificate):
        ZigzagCertificate(1, (1, 1, 1), (1,), ()).chain()
    with pytest.raises(MalformedCertificate):
        ZigzagCertificate.from_json("{}", B2.semigroup)
    with pytest.raises(MalformedCertificate):
        verify_zigzag(B2.T, [0], ZigzagCertificate(99, (99,), (), ()))


def test_json_round_trip(B2):
    cert = _cert(B2, "(1,1,2)", ["(1,1,1)", "(1,1,1)", "(1,1,2)"], ["(1,1,1)"], ["(1,1,2)"])
    text = cert.to_json(B2.semigroup)
    assert json.loads(text)["value"] == "(1,1,2)"
    assert ZigzagCertificate.from_json(text, B2.semigroup) == cert
