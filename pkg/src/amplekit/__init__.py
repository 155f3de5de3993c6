"""Ampleness of subsemigroups of finite inverse semigroups.

Cayley-table semigroups, partial bijections, Wagner-Preston style
representations, ampleness and richness checks, inverse hulls and extension
of isomorphisms, Brandt and Rees matrix semigroups, and zigzag certificates.
"""

__version__ = "0.1.0"

from .core import (
    FiniteSemigroup,
    HomVerdict,
    InverseFailure,
    InverseStructure,
    SubsetHandle,
    as_inverse,
    build_semigroup,
    detect_inverse_structure,
    idempotent_leq,
    natural_leq,
    principal_ideals,
    subsemigroup_closure,
    verify_homomorphism,
)
from .partial import (
    ConcreteInverseSemigroup,
    PartialBijection,
    abstractify,
    compose,
    enumerate_symmetric_inverse,
    generated_concrete,
    invert,
)
from .representations import (
    Representation,
    TheoremVerdict,
    check_two_sided_rho_hat,
    is_right_invariant,
    lambda_hat,
    restricted_rep,
    rho_hat,
    sigma_idempotent_identity,
    wagner_preston_lambda,
    wagner_preston_rho,
)
from .ample import (
    AmpleReport,
    check_central_idempotents,
    check_full,
    check_left_ample_in,
    check_principal_ideal_balance,
    check_rich,
    check_right_ample_in,
    check_ultra_rich,
    strict_left_evidence,
    strict_right_evidence,
)
from .hulls import (
    ExtensionVerdict,
    InverseHull,
    amalgam_report,
    extension_check,
    extension_oracle,
    hat_amalgam,
    inverse_hull,
    prime_set,
)
from .groups import FiniteGroup, cyclic_group, klein_four, trivial_group
from .rees import (
    BrandtSemigroup,
    ReesMatrixSemigroup,
    brandt,
    check_triple_ample,
    check_triple_rich,
    rees_matrix,
    strict_ideal_pair,
    triple_subsemigroup,
    two_index_family,
)
from .dominion import ZigzagCertificate, generated_inverse, verify_zigzag
from .cayley import parse_cayley, render_cayley
