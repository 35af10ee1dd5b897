"""Exact-integer engine for predicted Serre weights of tame ordinary GSp4 types."""

from .alcoves import AlcovePosition, classify, up_leq, up_set, up_transport, wall_reflect
from .companions import BggOutline, CompanionRecord, bgg_outline, companion_matches_table, companion_table
from .errors import EngineError
from .modular import (
    SerreWeight,
    VirtualSum,
    canonical_serre,
    decompose_weyl,
    enumerate_serre_weights,
    jh_semisimplify,
    normalize_weyl,
    operator_R,
    regular_representative,
    twist_weight,
    virtual_dim,
)
from .predictor import (
    LiftRecipe,
    PredictedWeight,
    generic_table,
    jantzen_profile,
    lift_recipes,
    predict,
    predict_direct,
    predict_jantzen,
    twist_equivariance_check,
)
from .tame import (
    OrdinarityProfile,
    TameType,
    exponent_orderings,
    exponents_to_modular_weight,
    is_motivically_odd,
    ordinarity_check,
    root_valuations,
    twist_type,
    type_from_exponents,
    type_from_modular_weight,
    type_from_weight,
    types_equivalent,
)
from .weights import RHO, SIMILITUDE, W0, W_G, Weight, WeylElement, coroot_pairing, dot_act, flags, spin_cochar, weyl_act

__version__ = "0.1.0"
