import itertools

import pytest

from amplekit.ample import (
    check_central_idempotents,
    check_full,
    check_left_ample_in,
    check_principal_ideal_balance,
    check_rich,
    check_right_ample_in,
    check_ultra_rich,
    central_idempotent_witness,
    strict_left_evidence,
    strict_right_evidence,
    two_condition_rich,
)
from amplekit.core import as_inverse, build_semigroup, principal_ideals, restrict
from amplekit.errors import NotSubsemigroup, PreconditionFailed, RichnessRequired
from amplekit.groups import cyclic_group
from amplekit.rees import triple_subsemigroup

from conftest import idx


def _ideals(B):
    eB, Be = principal_ideals(B.semigroup, B.semigroup.index("(1,1,1)"))
    return eB.sorted(), Be.sorted()


def test_left_ample_examples(B2):
    T = B2.T
    eB, Be = _ideals(B2)
    assert check_left_ample_in(T, T.elements)
    rep = check_left_ample_in(T, eB)
    assert rep.holds and rep.witness[idx(B2, "(1,1,2)")[0]] == idx(B2, "(1,1,1)")[0]
    bad = check_left_ample_in(T, Be)
    assert not bad and bad.counterexample == (idx(B2, "(2,1,1)")[0], idx(B2, "(2,1,2)")[0])


def test_right_ample_examples(B2):
    T = B2.T
    eB, Be = _ideals(B2)
    assert check_right_ample_in(T, T.elements)
    assert check_right_ample_in(T, Be).witness[idx(B2, "(2,1,1)")[0]] == idx(B2, "(1,1,1)")[0]
    bad = check_right_ample_in(T, eB)
    assert bad.counterexample == (idx(B2, "(1,1,2)")[0], idx(B2, "(2,1,2)")[0])


def test_not_a_subsemigroup(B2):
    with pytest.raises(NotSubsemigroup):
        check_left_ample_in(B2.T, idx(B2, "(1,1,2)"))


def test_full_examples(B2):
    T = B2.T
    assert check_full(T, sorted(T.idempotents))
    assert check_full(T, idx(B2, "0", "(1,1,1)", "(2,1,2)", "(1,1,2)"))
    bad = check_full(T, _ideals(B2)[0])
    assert bad.counterexample == (idx(B2, "(2,1,2)")[0],)


def test_rich_examples(B2, B2_Z2):
    T = B2.T
    eB, _ = _ideals(B2)
    assert check_rich(T, T.elements, "left") and check_rich(T, T.elements, "right")
    rep = check_rich(T, eB, "left")
    assert rep.holds
    for (x, y), a in rep.witness.items():
        assert T.mul(x, T.inv(y)) == T.mul(a, T.plus(y))
    S = triple_subsemigroup(B2_Z2, [1], ["1", "g"], [1, 2])
    assert check_rich(B2_Z2.T, S.sorted(), "left")


def test_rich_implies_one_sided_ample(B2_Z2):
    T = B2_Z2.T
    for side, one in (("left", check_left_ample_in), ("right", check_right_ample_in)):
        for S in _some_subsemigroups(B2_Z2):
            if check_rich(T, S, side):
                assert one(T, S)
            assert bool(check_rich(T, S, side)) == two_condition_rich(T, S, side)


def _some_subsemigroups(B):
    G = B.group
    out = []
    for rows, cols in itertools.product([(1,), (2,), (1, 2)], repeat=2):
        for H in ([G.identity], list(G.elements)):
            out.append(triple_subsemigroup(B, rows, H, cols).sorted())
    return out


def test_ultra_rich_examples(B2, I2):
    G = as_inverse(cyclic_group(3).base)
    assert check_ultra_rich(G, list(G.elements), "left")
    eB, Be = _ideals(B2)
    rep = check_ultra_rich(B2.T, eB, "left")
    assert isinstance(rep.holds, bool)
    A = I2.abstraction
    E = sorted(A.idempotents)
    rep = check_ultra_rich(A, E, "left")
    assert not rep.holds  # 0 y^+ = 0 for several factors
    with pytest.raises(RichnessRequired):
        check_ultra_rich(B2.T, eB, "right")


def test_strict_evidence(B2):
    T = B2.T
    eB, Be = _ideals(B2)
    ev = strict_left_evidence(T, eB)
    assert ev.own_side and not ev.other_injective and ev.other_side_blocked
    assert ev.other_collapse == (0, idx(B2, "(1,1,2)")[0])
    whole = strict_left_evidence(T, list(T.elements))
    assert whole.own_side and whole.other_injective and not whole.other_side_blocked
    dual = strict_right_evidence(T, Be)
    assert dual.own_side and not dual.other_injective


def test_central_idempotents(B2):
    assert check_central_idempotents(cyclic_group(4).base)
    e, s = central_idempotent_witness(B2.semigroup)
    S = B2.semigroup
    assert S.mul(e, s) != S.mul(s, e)
    assert (S.name(e), S.name(s)) == ("(1,1,1)", "(1,1,2)")
    left_zero = build_semigroup([[0, 0], [1, 1]])
    assert central_idempotent_witness(left_zero) == (0, 1)


def test_principal_ideal_balance_on_inverse(B2):
    T = B2.T
    ident = {x: x for x in T.elements}
    assert check_principal_ideal_balance(T.base, T, ident, T, ident).status == "holds"


def test_principal_ideal_balance_on_semilattice(I2):
    A = I2.abstraction
    members = [A.base.index("{}"), A.base.index("{0:0}")]
    U, labels = restrict(A.base, members)
    phi = dict(enumerate(labels))
    v = check_principal_ideal_balance(U, A, phi, A, phi)
    assert v.status == "holds" and v.details["central_idempotents"]


def test_principal_ideal_balance_hypothesis_failure(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    U, labels = restrict(T.base, eB)
    phi = dict(enumerate(labels))
    v = check_principal_ideal_balance(U, T, phi, T, phi)
    assert v.status == "hypothesis_fails" and v.details["side"] == "right"
    with pytest.raises(PreconditionFailed):
        check_principal_ideal_balance(U, T, {i: 0 for i in U.elements}, T, phi)
