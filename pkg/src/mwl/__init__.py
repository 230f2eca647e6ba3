"""Exact weight enumerators and MacWilliams-type identities for codes over Z_ell."""

from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    LengthMismatch,
    NotPrimePower,
    OutOfRange,
)
from .gray import (
    Field,
    GrayMap,
    apply_gray,
    bijective_extension_exists,
    canonical_gray_map,
    format_gray_table,
    image_is_linear,
    is_bijective_extension,
    is_weight_preserving,
    make_field,
    parse_gray_table,
)
from .homopoly import (
    HomoPoly,
    from_text,
    is_nonneg_integer_poly,
    poly_equal,
    poly_sub,
    substitute_transform,
    to_text,
)
from .identity import (
    IdentityConditions,
    IdentityQuery,
    IdentityStatus,
    IdentityVerdict,
    VerdictReason,
    check_identity,
    check_shiromoto_form,
    existence_condition,
    is_prime_power,
    scan_existence,
    search_counterexample,
    verify_identity_conditions,
)
from .krawtchouk import (
    KrawtchoukParams,
    coefficient_transform,
    krawtchouk,
    krawtchouk_matrix,
    orthogonality_check,
    transforms_agree,
)
from .weights import (
    WeightDistribution,
    WeightKind,
    euclidean_weight,
    lee_weight,
    vector_weight,
    weight_enumerator,
)
from .zmod import (
    DEFAULT_BUDGET,
    EXHAUSTIVE_CAP,
    LinearCode,
    all_linear_codes,
    cardinality,
    dual_code,
    enumerate_codewords,
    format_code_spec,
    parse_code_spec,
    resolve_budget,
)

__version__ = "0.1.0"
