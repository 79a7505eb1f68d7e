"""Finite computational toolkit for operator groups, their abelian
extensions, second cohomology, and the automorphism-lifting sequence."""

from .groups import (
    FiniteGroup,
    GroupError,
    GroupHom,
    all_isomorphisms,
    automorphism_group,
    cyclic_group,
    direct_product,
    find_isomorphism,
    group_from_permutations,
    identity_hom,
    is_homomorphism,
    is_normal,
    is_subgroup,
    quotient_group,
    subgroup_closure,
    trivial_group,
    validate_group,
)
from .abelian import (
    AbelianPresentation,
    FinAbHom,
    abelian_presentation,
    hom_kernel_image_quotient,
)
from .rrb import (
    RRBError,
    RRBGroup,
    RRBIdeal,
    RRBMorphism,
    center,
    circle_op,
    descended_operation,
    direct_product_rrb,
    enumerate_rrb_operators,
    identity_morphism,
    is_bijective,
    is_ideal,
    is_subrrb,
    is_trivial,
    morphism_image,
    morphism_kernel,
    one_point_rrb,
    quotient_rrb,
    restrict,
    rrb_automorphism_group,
    trivial_rrb,
    validate_morphism,
    validate_rrb,
)
from .modules import (
    ActionQuadruple,
    FactorSystem,
    OneCochain,
    RRBModule,
    add_factor_systems,
    negate_factor_system,
    trivial_action,
    twisted_action,
    validate_module,
    zero_factor_system,
)
from .extensions import (
    Extension,
    Section,
    are_equivalent,
    build_extension,
    canonical_section,
    extract_actions,
    extract_factor_system,
    extract_module,
    product_extension,
    validate_extension,
)
from .cohomology import (
    CochainComplex,
    CohomologyClass,
    b2_group,
    classical_h2_check,
    coboundary_1,
    cochain_complex,
    delta1_sigma,
    h2_group,
    z1_group,
    z2_contains,
    z2_group,
)
from .wells import (
    CompatiblePair,
    WellsContext,
    WellsReport,
    act_on_class,
    act_on_factor_system,
    aut_AK_H,
    aut_K_H,
    compatible_pairs,
    gamma_act,
    identity_pair,
    inducible_by_module_criterion,
    is_inducible,
    pair_is_compatible,
    restrict_and_induce,
    twisted_module,
    verify_wells_exactness,
    wells_map,
    z1_to_aut,
    aut_to_z1,
)

__version__ = "0.1.0"
