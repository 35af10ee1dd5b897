"""Typed errors raised by the engine.

Every error carries a short ``code`` string; the CLI reports it verbatim.
"""


class EngineError(Exception):
    code = "engine_error"


class ParityError(EngineError, ValueError):
    code = "parity"


class OutsideAlcoveRegion(EngineError, ValueError):
    code = "outside_alcove_region"


class TargetBelowSource(EngineError, ValueError):
    code = "target_below_source"


class UnsupportedWeight(EngineError, ValueError):
    code = "unsupported_weight"


class NegativeMultiplicity(EngineError, ArithmeticError):
    code = "negative_multiplicity"


class NoRegularRepresentative(EngineError, ValueError):
    code = "no_regular_representative"


class NotSymplecticallyBalanced(EngineError, ValueError):
    code = "not_symplectically_balanced"


class InvalidModularWeight(EngineError, ValueError):
    code = "invalid_modular_weight"


class ExponentsNotOrdered(EngineError, ValueError):
    code = "exponents_not_ordered"


class DegenerateTypeUseDirectRoute(EngineError, ValueError):
    code = "degenerate_type_use_direct_route"


class GenericityViolated(EngineError, ValueError):
    code = "genericity_violated"


class WeightOutOfRange(EngineError, ValueError):
    code = "weight_out_of_range"


class RouteDisagreement(EngineError, AssertionError):
    """Two prediction routes disagreed. Always a bug."""

    code = "route_disagreement"
