import itertools

import numpy as np
import pytest

from amplekit.core import (
    InverseFailure,
    InverseStructure,
    build_semigroup,
    detect_inverse_structure,
    find_isomorphism,
    idempotent_leq,
    natural_leq,
    natural_leq_by_idempotent,
    principal_ideals,
    require_subsemigroup,
    restrict,
    subsemigroup_closure,
    subset,
    verify_homomorphism,
)
from amplekit.errors import (
    AssociativityError,
    DuplicateNameError,
    NotIdempotent,
    NotSubsemigroup,
    RangeError,
)
from amplekit.groups import cyclic_group

LEFT_ZERO = [[0, 0], [1, 1]]
Z2 = [[0, 1], [1, 0]]


def test_left_zero_is_valid_without_zero():
    S = build_semigroup(LEFT_ZERO)
    assert S.order == 2 and S.zero is None


def test_cyclic_group_table_is_valid():
    S = build_semigroup(Z2)
    assert S.zero is None
    assert S.is_commutative()


def test_bad_table_reports_first_triple():
    with pytest.raises(AssociativityError) as info:
        build_semigroup([[1, 1], [0, 0]])
    assert info.value.triple == (0, 0, 0)


def test_range_and_name_errors():
    with pytest.raises(RangeError):
        build_semigroup([[0, 2], [1, 0]])
    with pytest.raises(RangeError):
        build_semigroup([[0, 1, 0], [1, 0, 1]])
    with pytest.raises(DuplicateNameError):
        build_semigroup(Z2, ["e", "e"])


def test_zero_detected(B2):
    assert B2.semigroup.zero == 0
    assert B2.semigroup.name(0) == "0"


def test_table_is_read_only():
    S = build_semigroup(Z2)
    with pytest.raises(ValueError):
        S.table[0, 0] = 1


def test_inverse_structure_of_z2():
    T = detect_inverse_structure(build_semigroup(Z2))
    assert isinstance(T, InverseStructure)
    assert T.inverse == (0, 1)


def test_left_zero_has_two_inverses():
    res = detect_inverse_structure(build_semigroup(LEFT_ZERO))
    assert isinstance(res, InverseFailure)
    assert res.element == 0 and res.inverses == (0, 1)


def test_symmetric_inverse_on_two_points_is_inverse(I2):
    res = detect_inverse_structure(I2.abstraction.base)
    assert isinstance(res, InverseStructure) and res.order == 7


def test_natural_order_examples(B2, I2):
    T = B2.T
    x, y = B2.semigroup.index("(1,1,2)"), B2.semigroup.index("(1,1,1)")
    assert natural_leq(T, x, x)
    assert not natural_leq(T, x, y)
    A = I2.abstraction
    empty = A.base.index("{}")
    assert all(natural_leq(A, empty, y) for y in A.elements)


def test_idempotent_order_examples(B2):
    S = B2.semigroup
    e11, e22 = S.index("(1,1,1)"), S.index("(2,1,2)")
    assert idempotent_leq(S, e11, e11)
    assert idempotent_leq(S, 0, e11)
    assert not idempotent_leq(S, e11, e22)
    with pytest.raises(NotIdempotent):
        idempotent_leq(S, S.index("(1,1,2)"), e11)


def test_natural_order_two_formulations_agree(B2_Z2):
    T = B2_Z2.T
    for x, y in itertools.product(T.elements, repeat=2):
        assert natural_leq(T, x, y) == natural_leq_by_idempotent(T, x, y)


def test_closure_examples(B2):
    S = B2.semigroup
    e = S.index("(1,1,1)")
    assert subsemigroup_closure(S, [e]).members == {e}
    Z4 = cyclic_group(4).base
    assert len(subsemigroup_closure(Z4, [1])) == 4
    x = S.index("(1,1,2)")
    assert subsemigroup_closure(S, [x]).members == {x, 0}


def test_closure_is_order_independent(B2_Z2):
    S = B2_Z2.semigroup
    seed = [3, 7, 1]
    assert subsemigroup_closure(S, seed) == subsemigroup_closure(S, list(reversed(seed)))


def test_principal_ideals(B2):
    S = B2.semigroup
    e = S.index("(1,1,1)")
    eS, Se = principal_ideals(S, e)
    assert eS.names() == ["0", "(1,1,1)", "(1,1,2)"]
    assert Se.names() == ["0", "(1,1,1)", "(2,1,1)"]
    z1, z2 = principal_ideals(S, 0)
    assert z1.members == z2.members == {0}
    G = cyclic_group(3).base
    for g in G.elements:
        a, b = principal_ideals(G, g)
        assert len(a) == len(b) == 3


def test_homomorphism_verdicts():
    Z = build_semigroup(Z2)
    assert verify_homomorphism([0, 1], Z, Z).kind == "mono"
    assert verify_homomorphism([0, 0], Z, Z).kind == "hom"
    bad = verify_homomorphism([1, 1], Z, Z)
    assert bad.kind == "not_hom" and bad.witness == (0, 0)


def test_generator_pair_is_a_witness():
    # f(g*g) = f(1) = g but f(g)*f(g) = 1
    Z = build_semigroup(Z2)
    v = verify_homomorphism({0: 1, 1: 1}, Z, Z)
    assert not v.is_hom
    a, b = v.witness
    assert {1: 1, 0: 1}[Z.mul(a, b)] != Z.mul(1, 1)


def test_subset_handles(B2):
    S = B2.semigroup
    h = subset(S, [0, 1])
    assert h == subset(S, [1, 0])
    with pytest.raises(NotSubsemigroup):
        require_subsemigroup(S, [S.index("(1,1,2)")])
    with pytest.raises(RangeError):
        subset(S, [99])


def test_restrict_and_isomorphism(B2):
    S = B2.semigroup
    members = principal_ideals(S, S.index("(1,1,1)"))[0].sorted()
    U, labels = restrict(S, members)
    assert U.order == 3 and labels == members
    perm = [0, 2, 1, 4, 3]
    inv = np.argsort(perm)
    table = [[perm[S.mul(inv[a], inv[b])] for b in range(5)] for a in range(5)]
    f = find_isomorphism(S, build_semigroup(table))
    assert f is not None and verify_homomorphism(f, S, build_semigroup(table)).is_mono
