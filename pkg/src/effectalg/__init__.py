"""Finite effect-algebra workbench.

Partial Cayley tables over explicit finite carriers, the unit-adjoining
construction with its adjunction and monad, exact-rational states, and
exhaustive enumeration of all small instances for mechanical law checking.
"""

from .core import (
    Algebra,
    FiniteEa,
    FiniteGea,
    OrderRelation,
    PartialMap,
    StructureError,
    ValidationReport,
    Violation,
    builtin,
    complement,
    derive_order,
    find_top,
    ominus,
    product_ea,
    validate_ea,
    validate_gea,
)
from .catlaws import (
    MonadInstance,
    LawReport,
    algebra_from_ea,
    em_algebra_check,
    mu,
    t_mor,
    t_obj,
    verify_counit_naturality,
    verify_monad_laws,
    verify_triangles,
    verify_unit_naturality,
)
from .enumeration import (
    eas_upto,
    enumerate_eas,
    enumerate_geas,
    geas_upto,
    is_isomorphic,
)
from .morphisms import (
    FullnessCheck,
    Morphism,
    check_full,
    check_isomorphism,
    check_morphism,
    compose,
    enumerate_morphisms,
    forget,
    identity,
    transpose_to_ea,
    transpose_to_gea,
)
from .states import (
    AdditiveMap,
    ProbeReport,
    State,
    additive_maps_grid,
    check_additive,
    check_state,
    enumerate_ideals,
    extend_state,
    ideal_correspondence_probe,
)
from .unitization import counit, iso_to_product, unit_embedding, unitize, unitize_morphism

__version__ = "0.1.0"
