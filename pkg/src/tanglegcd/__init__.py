"""Euclidean algorithm variants, step minimality, and tangle untangling.

Modules:

* rationals: canonical exact fractions with a point at infinity.
* euclid: trace runners for the regular, least-absolute-remainders and
  negative-remainders variants, plus subtraction/swap step accounting.
* enumeration: brute-force enumeration of every sign-choice trace and the
  minimality certificate built from it.
* tangles: the twist/rotate move calculus and Euclid-driven untangling plans.
* cli: the `tanglegcd` command.
"""

from .enumeration import (
    BoundExceededError,
    DEFAULT_BOUND,
    EnumerationResult,
    enumerate_all,
    minimize,
)
from .euclid import (
    EuclidStep,
    EuclidTrace,
    InvalidInputError,
    SignChooser,
    StepCount,
    Variant,
    WrongVariantError,
    division_count,
    gcd_of,
    goodman_zaring_defect,
    run_general,
    run_lar,
    run_negative,
    run_regular,
    step_count,
    trace_to_dict,
)
from .rationals import (
    ExtendedRational,
    FractionParseError,
    IndeterminateFormError,
    INFINITY,
    ZERO,
    normalize,
    parse_fraction,
    rotate_value,
    twist_value,
)
from .tangles import (
    Move,
    MoveParseError,
    PlanMetrics,
    ReplayReport,
    Stage,
    TangleState,
    UNTANGLED,
    UntanglePlan,
    apply_move,
    format_moves,
    parse_moves,
    plan_metrics,
    plan_untangle,
    replay,
    tangle_number,
    verify_plan,
)

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "DEFAULT_BOUND",
    "EnumerationResult",
    "EuclidStep",
    "EuclidTrace",
    "ExtendedRational",
    "FractionParseError",
    "INFINITY",
    "IndeterminateFormError",
    "InvalidInputError",
    "Move",
    "MoveParseError",
    "PlanMetrics",
    "ReplayReport",
    "SignChooser",
    "Stage",
    "StepCount",
    "TangleState",
    "UNTANGLED",
    "UntanglePlan",
    "Variant",
    "WrongVariantError",
    "ZERO",
    "apply_move",
    "division_count",
    "enumerate_all",
    "format_moves",
    "gcd_of",
    "goodman_zaring_defect",
    "minimize",
    "normalize",
    "parse_fraction",
    "parse_moves",
    "plan_metrics",
    "plan_untangle",
    "replay",
    "rotate_value",
    "run_general",
    "run_lar",
    "run_negative",
    "run_regular",
    "step_count",
    "tangle_number",
    "trace_to_dict",
    "twist_value",
    "verify_plan",
]
