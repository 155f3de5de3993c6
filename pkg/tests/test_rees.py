import pytest

from amplekit.core import detect_inverse_structure, InverseStructure
from amplekit.errors import IrregularMatrix, NotClosed, PreconditionFailed
from amplekit.groups import cyclic_group, group_by_name, klein_four, trivial_group
from amplekit.rees import (
    brandt,
    check_triple_ample,
    check_triple_rich,
    rees_matrix,
    strict_ideal_pair,
    triple_subsemigroup,
    two_index_family,
)

from conftest import idx


def test_smallest_rees_matrix():
    R = rees_matrix(trivial_group(), 1, 1, [[0]])
    assert len(R) == 2 and R.semigroup.names == ("0", "(1,1,1)")


def test_rees_with_identity_matrix_is_brandt(B2):
    R = rees_matrix(trivial_group(), 2, 2, [[0, None], [None, 0]])
    assert R.semigroup == B2.semigroup


def test_irregular_matrix():
    with pytest.raises(IrregularMatrix) as info:
        rees_matrix(trivial_group(), 2, 2, [[0, 0], [None, None]])
    assert info.value.kind == "row" and info.value.index == 2
    with pytest.raises(IrregularMatrix) as info:
        rees_matrix(trivial_group(), 2, 2, [[0, None], [0, None]])
    assert info.value.kind == "column"


def test_rees_multiplication_rule():
    G = cyclic_group(3)
    P = [[0, 1], [2, None]]
    R = rees_matrix(G, 2, 2, P)
    for a in range(1, len(R)):
        i, g, lam = R.triples[a]
        for b in range(1, len(R)):
            j, h, mu = R.triples[b]
            p = P[lam][j]
            expect = 0 if p is None else R._pos(i, G.mul(G.mul(g, p), h), mu)
            assert R.semigroup.mul(a, b) == expect


def test_linear_index_layout(B2_Z2):
    B = B2_Z2
    assert B.element(1, "1", 1) == 1
    assert B.element(2, "g", 1) == 1 + (1 * 2 + 1) * 2 + 0
    assert B.triple(B.element(2, "g", 1)) == (2, 1, 1)
    assert B.triple(0) is None


@pytest.mark.parametrize("G,k,size,idem", [
    (trivial_group(), 2, 5, 3),
    (cyclic_group(2), 2, 9, 3),
    (trivial_group(), 1, 2, 2),
    (klein_four(), 3, 37, 4),
])
def test_brandt_sizes(G, k, size, idem):
    B = brandt(G, k)
    assert len(B) == size == k * k * G.order + 1
    assert len(B.T.idempotents) == idem == k + 1
    assert isinstance(detect_inverse_structure(B.semigroup), InverseStructure)
    assert B.semigroup.is_commutative() == (k == 1)


def test_brandt_inverse_closed_form(B2_Z2):
    B = B2_Z2
    for x in range(1, len(B)):
        i, g, j = B.triple(x)
        assert B.T.inv(x) == B.element(j, B.group.inv(g), i)
    assert sorted(B.T.idempotents) == [0] + B.nonzero_idempotents()


def test_triple_subsemigroups(B2, klein):
    S = triple_subsemigroup(B2, [1], ["1"], [1, 2])
    assert S.names() == ["0", "(1,1,1)", "(1,1,2)"]
    B3 = brandt(klein, 3)
    fam = triple_subsemigroup(B3, [1, 2], klein.elements, [1, 2, 3])
    assert len(fam) == 2 * 4 * 3 + 1
    Z3 = brandt(cyclic_group(3), 2)
    with pytest.raises(NotClosed):
        triple_subsemigroup(Z3, [1], ["g"], [1])
    # disjoint index sets make every product zero
    assert len(triple_subsemigroup(Z3, [1], ["g"], [2])) == 2


def test_strict_ideal_pair_trivial(B2):
    pair = strict_ideal_pair(B2, idx(B2, "(1,1,1)")[0])
    eB, Be = pair.right_ideal, pair.left_ideal
    assert sorted(eB.members) == idx(B2, "0", "(1,1,1)", "(1,1,2)")
    assert eB.left.holds and not eB.right.holds
    assert eB.right.counterexample[0] == idx(B2, "(1,1,2)")[0]
    assert eB.chosen == idx(B2, "(1,1,2)")[0] and eB.chosen_collapses_to_zero
    assert Be.right.holds and not Be.left.holds and Be.chosen_collapses_to_zero


def test_strict_ideal_pair_z2(B2_Z2):
    pair = strict_ideal_pair(B2_Z2, B2_Z2.idempotent(1))
    assert len(pair.right_ideal.members) == 5
    assert pair.right_ideal.left.holds and not pair.right_ideal.right.holds


def test_strict_ideal_pair_preconditions(B2):
    with pytest.raises(PreconditionFailed):
        strict_ideal_pair(brandt(trivial_group(), 1), 1)
    with pytest.raises(PreconditionFailed):
        strict_ideal_pair(B2, idx(B2, "(1,1,2)")[0])
    with pytest.raises(PreconditionFailed):
        strict_ideal_pair(B2, 0)


def test_triple_ample_group_part():
    B = brandt(cyclic_group(2), 2)
    v = check_triple_ample(B, [1], ["1"], [1, 2])
    assert v.definitional.holds and v.structural and v.agrees
    Z3 = brandt(cyclic_group(3), 2)
    v = check_triple_ample(Z3, [1, 2], Z3.group.elements, [1, 2])
    assert v.definitional.holds and v.structural


def test_triple_ample_needs_index_containment(B2):
    # ({1,2} x {1} x {1}) u {0}: (2,1,1)^+ = (2,1,2) is missing although 1 is in H
    v = check_triple_ample(B2, [1, 2], ["1"], [1], "left")
    assert not v.definitional.holds and v.structural
    assert not v.agrees and v.agrees_with_indices
    assert check_triple_ample(B2, [1, 2], ["1"], [1], "right").definitional.holds


def test_triple_rich():
    Z4 = brandt(cyclic_group(4), 2)
    v = check_triple_rich(Z4, [1], ["1", "g^2"], [1, 2])
    assert v.definitional.holds and v.structural
    v = check_triple_rich(Z4, [1], Z4.group.elements, [1, 2])
    assert v.definitional.holds and v.structural
    v = check_triple_rich(Z4, [1], ["1"], [1, 2])
    assert v.definitional.holds
    T = Z4.T
    for (x, y), a in v.definitional.witness.items():
        assert T.mul(x, T.inv(y)) == T.mul(a, T.plus(y))


@pytest.mark.parametrize("name", ["trivial", "Z2", "Z3", "Z4", "klein"])
def test_two_index_family(name):
    fam = two_index_family(group_by_name(name))
    B = fam["brandt"]
    assert fam["left_ample"].holds
    assert not fam["right_ample"].holds
    assert fam["dual_products_escape"]
    assert B.name(fam["outside_element"]) == "(3,1,3)"
    assert fam["principal_ideals_containing"] == []


def test_group_names():
    assert group_by_name("Z4").name(2) == "g^2"
    assert group_by_name("klein").order == 4
    with pytest.raises(ValueError):
        group_by_name("S3")
