"""Exact-arithmetic invariants of complete intersections, a classification
of the circle-symmetric ones in complex dimension at most 3, and a verifier
plus bounded search for circle fixed-point configurations on 6-manifolds.
"""

from .algebra import (
    CharacterFunction,
    LiftPolynomial,
    NonUnitError,
    OrderMismatchError,
    Rational,
    TruncatedSeries,
    genus_line_factor,
)
from .classify import (
    HypothesisChecklist,
    HypothesisItem,
    SymmetryVerdict,
    s1_verdict,
    theorem_hypotheses,
)
from .configio import (
    SchemaError,
    config_from_obj,
    config_to_obj,
    dump_config,
    fraction_str,
    load_config,
    parse_config,
)
from .invariants import (
    CompleteIntersection,
    InvariantReport,
    ParityError,
    a_hat_genus,
    c1_coeff,
    chern_series,
    euler_characteristic,
    invariants,
    is_spin,
    normalize,
    pontrjagin_coeff,
    signature,
)
from .localization import (
    AmbientData,
    CheckResult,
    Configuration,
    ConfigurationError,
    Flags,
    FourComponent,
    PointComponent,
    SurfaceComponent,
    TEMPLATES,
    UnsupportedComponentError,
    VerificationReport,
    check_euler,
    check_lemma41,
    check_p1x,
    check_signature_rigidity,
    check_x3,
    p1x_local_datum,
    p1x_sum,
    shift_lift,
    signature_checks,
    signature_local_datum,
    sum_p1x,
    sum_x3,
    verify_case,
    x3_local_datum,
    x3_sum,
)
from .search import (
    BudgetExceededError,
    SearchBounds,
    SearchFlags,
    search_case,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientData",
    "BudgetExceededError",
    "CharacterFunction",
    "CheckResult",
    "CompleteIntersection",
    "Configuration",
    "ConfigurationError",
    "Flags",
    "FourComponent",
    "HypothesisChecklist",
    "HypothesisItem",
    "InvariantReport",
    "LiftPolynomial",
    "NonUnitError",
    "OrderMismatchError",
    "ParityError",
    "PointComponent",
    "Rational",
    "SchemaError",
    "SearchBounds",
    "SearchFlags",
    "SurfaceComponent",
    "SymmetryVerdict",
    "TEMPLATES",
    "TruncatedSeries",
    "UnsupportedComponentError",
    "VerificationReport",
    "a_hat_genus",
    "c1_coeff",
    "check_euler",
    "check_lemma41",
    "check_p1x",
    "check_signature_rigidity",
    "check_x3",
    "chern_series",
    "config_from_obj",
    "config_to_obj",
    "dump_config",
    "euler_characteristic",
    "fraction_str",
    "genus_line_factor",
    "invariants",
    "is_spin",
    "load_config",
    "normalize",
    "p1x_local_datum",
    "p1x_sum",
    "parse_config",
    "pontrjagin_coeff",
    "s1_verdict",
    "search_case",
    "shift_lift",
    "signature",
    "signature_checks",
    "signature_local_datum",
    "sum_p1x",
    "sum_x3",
    "theorem_hypotheses",
    "verify_case",
    "x3_local_datum",
    "x3_sum",
]
