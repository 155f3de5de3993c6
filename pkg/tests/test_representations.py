import pytest

from amplekit.core import as_inverse, principal_ideals, verify_homomorphism
from amplekit.errors import NotInvariant, PreconditionFailed
from amplekit.groups import cyclic_group
from amplekit.partial import PartialBijection, compose, invert
from amplekit.representations import (
    check_two_sided_rho_hat,
    domain_identities_failure,
    intrinsic_matches,
    invariant_subsets,
    is_left_invariant,
    is_right_invariant,
    lambda_hat,
    restricted_rep,
    restriction_is_homomorphic,
    rho_hat,
    right_invariant_subsets,
    sample_right_invariant_subsets,
    sigma_idempotent_identity,
    wagner_preston_lambda,
    wagner_preston_rho,
)
from amplekit.rees import brandt

from conftest import idx


def _ideals(B):
    e = B.semigroup.index("(1,1,1)")
    eB, Be = principal_ideals(B.semigroup, e)
    return eB.sorted(), Be.sorted()


def test_rho_on_group_is_right_translation():
    G = cyclic_group(2)
    T = as_inverse(G.base)
    rho = wagner_preston_rho(T)
    assert rho.maps[1] == PartialBijection(2, (1, 0))
    assert rho.homomorphism_verdict().is_mono
    lam = wagner_preston_lambda(T)
    assert lam.maps[1] == PartialBijection(2, (1, 0))


def test_rho_on_brandt_is_injective(B2):
    rho = wagner_preston_rho(B2.T)
    assert len(rho.image()) == 5
    assert rho.maps[0].pairs() == {0: 0}


def test_lambda_on_brandt_is_injective(B2):
    lam = wagner_preston_lambda(B2.T)
    assert len(lam.image()) == 5
    assert lam.homomorphism_verdict().is_mono


def test_lambda_is_reversed_under_right_action_product(B2):
    # lambda_x lambda_y = lambda_(yx) when composed as right actions
    T = B2.T
    lam = wagner_preston_lambda(T)
    x, y = idx(B2, "(1,1,2)", "(2,1,1)")
    assert compose(lam.maps[x], lam.maps[y]) == lam.maps[T.mul(y, x)]
    assert lam.mul(lam.maps[x], lam.maps[y]) == lam.maps[T.mul(x, y)]


def test_translation_images_are_isomorphic(B2_Z2):
    T = B2_Z2.T
    T1, m1 = wagner_preston_rho(T).target()
    T2, m2 = wagner_preston_lambda(T).target()
    assert T1.order == T2.order == T.order
    theta = {m1[x]: m2[x] for x in T.elements}
    assert verify_homomorphism(theta, T1, T2).is_mono


def test_ideal_identities(B2_Z2, I3):
    assert domain_identities_failure(B2_Z2.T) is None
    assert domain_identities_failure(I3.abstraction) is None


def test_invariance_examples(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    assert is_right_invariant(T, eB, T.elements)
    assert is_right_invariant(T, eB, eB)
    assert not is_right_invariant(T, eB, idx(B2, "(2,1,1)"))
    assert is_left_invariant(T, eB, eB)


def test_restricted_rep_needs_invariance(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    with pytest.raises(NotInvariant):
        restricted_rep(T, eB, idx(B2, "(2,1,1)"))


def test_restricted_rep_on_everything_is_rho(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    rho = wagner_preston_rho(T)
    rep = restricted_rep(T, eB, T.elements)
    assert all(rep.maps[s] == rho.maps[s] for s in eB)


def test_restricted_rep_on_right_ideal(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    rep = restricted_rep(T, eB, eB)
    assert rep.m == 3 and rep.is_injective
    # domain S s s^-1, image S s
    for s in eB:
        dom = {rep.ground[p] for p in rep.maps[s].domain}
        img = {rep.ground[p] for p in rep.maps[s].image}
        assert dom == {T.mul(u, T.plus(s)) for u in eB}
        assert img == {T.mul(u, s) for u in eB}


def test_rho_hat_examples(B2):
    T = B2.T
    eB, Be = _ideals(B2)
    full = rho_hat(T, T.elements)
    assert full.maps == wagner_preston_rho(T).maps
    r = rho_hat(T, eB)
    assert r.is_injective and r.image_left_ample_failure() is None
    assert r.notes["embedding"]
    collapsed = rho_hat(T, Be)
    assert not collapsed.is_injective
    assert collapsed.maps[idx(B2, "(2,1,1)")[0]] == collapsed.maps[0]


def test_lambda_hat_examples(B2):
    T = B2.T
    eB, Be = _ideals(B2)
    assert lambda_hat(T, T.elements).maps == wagner_preston_lambda(T).maps
    l = lambda_hat(T, Be)
    assert l.is_injective and l.image_right_ample_failure() is None
    collapsed = lambda_hat(T, eB)
    u = idx(B2, "(1,1,2)")[0]
    assert collapsed.maps[u] == collapsed.maps[0]
    assert collapsed.collapsing_pair() == (0, u)


def test_intrinsic_constructions_match(B2_Z2):
    T = B2_Z2.T
    eB, Be = principal_ideals(T.base, B2_Z2.semigroup.index("(1,1,1)"))
    assert intrinsic_matches(T, eB.sorted(), "left")
    assert intrinsic_matches(T, Be.sorted(), "right")
    assert intrinsic_matches(T, list(T.elements), "left")


def test_sigma_idempotent_identity(B2, I2):
    T = B2.T
    eB, Be = _ideals(B2)
    assert sigma_idempotent_identity(T, eB)["holds"]
    A = I2.abstraction
    assert sigma_idempotent_identity(A, list(A.elements))["holds"]
    hat = rho_hat(T, eB)
    s = idx(B2, "(1,1,2)")[0]
    sig = hat.maps[s]
    assert compose(sig, invert(sig)) == hat.maps[idx(B2, "(1,1,1)")[0]]
    with pytest.raises(PreconditionFailed):
        sigma_idempotent_identity(T, Be)


def test_idempotent_sigma_is_partial_identity(B2):
    hat = rho_hat(B2.T, _ideals(B2)[0])
    e = idx(B2, "(1,1,1)")[0]
    assert hat.maps[e].is_idempotent()


def test_two_sided_rho_hat(B2):
    T = B2.T
    assert check_two_sided_rho_hat(T, T.elements).status == "holds"
    eB, _ = _ideals(B2)
    v = check_two_sided_rho_hat(T, eB)
    assert v.status == "hypothesis_fails" and v.witness == idx(B2, "(1,1,2)")[0]
    full = idx(B2, "0", "(1,1,1)", "(2,1,2)", "(1,1,2)")
    assert check_two_sided_rho_hat(T, full).status in ("holds", "hypothesis_fails")


def test_invariant_subsets_exhaustive_and_sampled(B2):
    T = B2.T
    eB, _ = _ideals(B2)
    subsets = right_invariant_subsets(T, eB)
    assert frozenset() in subsets and frozenset(T.elements) in subsets
    assert all(restriction_is_homomorphic(T, eB, Y) is None for Y in subsets)
    big = brandt(cyclic_group(2), 3)
    a = sample_right_invariant_subsets(big.T, list(big.T.elements), 8, seed=3)
    b = sample_right_invariant_subsets(big.T, list(big.T.elements), 8, seed=3)
    assert a == b
    assert all(is_right_invariant(big.T, list(big.T.elements), Y) for Y in a)
    assert len(invariant_subsets(big.T, list(big.T.elements), count=5)) == 5
