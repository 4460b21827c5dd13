"""Finite-semigroup toolkit: membership in the power pseudovariety of
completely simple semigroups by several cross-validated algorithms."""

from .core import (
    GreenData,
    Semigroup,
    SubSemigroup,
    build_semigroup,
    closure,
    divides,
    green_classes,
    index_period,
    omega_power,
    principal_ideal,
    subsemigroup,
)
from .constructions import (
    PowerSemigroup,
    RegularRepresentation,
    cyclic_group,
    direct_product,
    free_constant_band,
    power_semigroup,
    rees_matrix,
    regular_representation_image,
    wreath_right_zero,
)
from .terms import (
    CheckResult,
    Concat,
    IntPow,
    OmegaPow,
    Pseudoidentity,
    Var,
    builtin,
    check,
    evaluate,
    format_term,
    parse,
    transform_star_rz,
)
from .varieties import (
    MembershipResult,
    VARIETY_NAMES,
    bg_by_unique_inverses,
    is_member,
    is_member_by_identity,
    malcev_with_band,
    star_rz_membership,
)
from .pcs import (
    Consolidation,
    DivisionReport,
    METHODS,
    PowerTheoremReport,
    Verdict,
    check_pg_equals_bg,
    consolidate,
    decide,
    division_witness,
    verify_power_theorem,
)
from .census import (
    CensusReport,
    canonical_form,
    cross_validate,
    enumerate_semigroups,
    random_transformation_semigroup,
    transformation_semigroup,
)

__version__ = "0.1.0"
