"""Decision procedures for MacWilliams-type identities on Lee and Euclidean weights.

Covers: the exact existence condition on the modulus, per-code verification
of the identity against the dual's enumerator, the fixed-root (Shiromoto)
form with its integrality check, range scans, and counterexample search.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BudgetExceeded
from .gray import canonical_gray_map, is_bijective_extension, make_field
from .homopoly import HomoPoly, is_nonneg_integer_poly, poly_equal, substitute_transform
from .weights import WeightKind, weight_enumerator
from .zmod import (
    EXHAUSTIVE_CAP,
    LinearCode,
    all_linear_codes,
    resolve_budget,
    validate_modulus,
)


class IdentityStatus(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    STRUCTURALLY_IMPOSSIBLE = "StructurallyImpossible"
    NOT_WELL_FORMED = "NotWellFormed"


class VerdictReason(Enum):
    MULTIPLIER_NOT_INTEGRAL = "MultiplierNotIntegral"
    NO_BIJECTIVE_GRAY_MAP = "NoBijectiveGrayMap"
    TRANSFORM_NOT_ENUMERATOR = "TransformNotEnumerator"
    VERIFIED = "Verified"


@dataclass(frozen=True)
class IdentityVerdict:
    status: IdentityStatus
    reason: VerdictReason
    discrepancy: HomoPoly | None = None

    def __post_init__(self):
        if self.status is IdentityStatus.FAILS:
            if self.discrepancy is None or self.discrepancy.is_zero():
                raise ValueError("a failing verdict needs a nonzero discrepancy")
        elif self.discrepancy is not None:
            raise ValueError(f"status {self.status.value} must not carry a discrepancy")


@dataclass(frozen=True)
class IdentityQuery:
    code: LinearCode
    kind: WeightKind
    multiplier: int

    def __post_init__(self):
        if self.kind is WeightKind.HAMMING:
            raise ValueError("identity queries cover Lee and Euclidean weights only")
        if self.multiplier < 2:
            raise ValueError(f"multiplier must be >= 2, got {self.multiplier}")


@dataclass(frozen=True)
class IdentityConditions:
    """The separately testable ingredients behind a Lee identity verdict."""

    bijective_gray: bool
    transform_is_enumerator: bool
    dual_match: bool


def _int_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) by binary search; exact integer arithmetic only."""
    if x < 1 or k < 1:
        raise ValueError("root arguments must be positive")
    lo, hi = 1, x
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def is_prime_power(t: int) -> bool:
    if t < 2:
        return False
    p = 2
    while p * p <= t:
        if t % p == 0:
            while t % p == 0:
                t //= p
            return t == 1
        p += 1
    return True  # t itself is prime


def _kind_exponent(ell: int, kind: WeightKind) -> int:
    if kind is WeightKind.HAMMING:
        raise ValueError("existence conditions cover Lee and Euclidean weights only")
    return kind.scale(ell)


def existence_condition(ell: int, kind: WeightKind) -> int | None:
    """The unique multiplier t with t^exponent = ell, if a valid one exists.

    For the Lee weight the exponent is floor(ell/2), for the Euclidean
    weight floor(ell/2)^2; t must additionally be a prime power dividing
    ell (divisibility is automatic once t^exponent = ell).
    """
    ell = validate_modulus(ell)
    kappa = _kind_exponent(ell, kind)
    # t >= 2 forces 2^kappa <= ell; bit arithmetic keeps the scan exact and fast
    if kappa > ell.bit_length() - 1:
        return None
    t = _int_root(ell, kappa)
    if t >= 2 and t**kappa == ell and is_prime_power(t):
        return t
    return None


def check_identity(query: IdentityQuery, budget: int | None = None) -> IdentityVerdict:
    """Compare the dual's enumerator with the transformed enumerator, exactly.

    Holds iff wenum(dual) equals (1/|C|) wenum(C)(x + (t-1)y, x - y); a
    failing verdict carries the discrepancy transform - dual.
    """
    code, kind, t = query.code, query.kind, query.multiplier
    left = weight_enumerator(code.dual(budget), kind, budget)
    right = substitute_transform(
        weight_enumerator(code, kind, budget), t, code.cardinality(budget)
    )
    if poly_equal(left, right):
        return IdentityVerdict(IdentityStatus.HOLDS, VerdictReason.VERIFIED)
    return IdentityVerdict(IdentityStatus.FAILS, VerdictReason.VERIFIED, right - left)


def check_shiromoto_form(
    code: LinearCode, kind: WeightKind, budget: int | None = None
) -> IdentityVerdict:
    """The fixed-root form: multiplier ell^(1/exponent), checked for integrality.

    If the root is not an integer the claimed substitution has no exact
    meaning and the verdict is NotWellFormed; otherwise this delegates to
    check_identity with the integer multiplier.
    """
    ell = code.ell
    kappa = _kind_exponent(ell, kind)
    t = _int_root(ell, kappa)
    if t**kappa != ell:
        return IdentityVerdict(
            IdentityStatus.NOT_WELL_FORMED, VerdictReason.MULTIPLIER_NOT_INTEGRAL
        )
    return check_identity(IdentityQuery(code, kind, t), budget)


def scan_existence(kind: WeightKind, max_ell: int) -> list[tuple[int, int]]:
    """All moduli 2..max_ell admitting an identity, with their multipliers."""
    if max_ell < 2:
        raise ValueError(f"max_ell must be >= 2, got {max_ell}")
    out = []
    for ell in range(2, max_ell + 1):
        t = existence_condition(ell, kind)
        if t is not None:
            out.append((ell, t))
    return out


def search_counterexample(
    ell: int,
    kind: WeightKind,
    multiplier: int,
    max_length: int,
    budget: int | None = None,
) -> tuple[LinearCode, HomoPoly] | None:
    """First code (canonical order, lengths 1..max_length) failing the identity.

    Returns the code together with its discrepancy polynomial, or None if
    every code passes.
    """
    ell = validate_modulus(ell)
    if max_length < 1:
        raise ValueError(f"max_length must be >= 1, got {max_length}")
    if ell**max_length > min(resolve_budget(budget), EXHAUSTIVE_CAP):
        raise BudgetExceeded(
            f"counterexample search over Z_{ell}^(<= {max_length}) exceeds the budget"
        )
    for n in range(1, max_length + 1):
        for code in all_linear_codes(ell, n, budget):
            verdict = check_identity(IdentityQuery(code, kind, multiplier), budget)
            if verdict.status is IdentityStatus.FAILS:
                assert verdict.discrepancy is not None
                return code, verdict.discrepancy
    return None


def verify_identity_conditions(
    ell: int, multiplier: int, code: LinearCode, budget: int | None = None
) -> IdentityConditions:
    """Report which ingredients of the Lee identity hold for this code.

    bijective_gray: the canonical map extends to a bijection (ell = m^ell1
    with distinct rows). transform_is_enumerator: the transformed enumerator
    could be a code's enumerator at all, i.e. nonnegative integer
    coefficients with leading coefficient 1. dual_match: the transform
    equals the dual's Lee enumerator, which is the identity itself.
    """
    gmap = canonical_gray_map(ell, make_field(multiplier))
    transformed = substitute_transform(
        weight_enumerator(code, WeightKind.LEE, budget),
        multiplier,
        code.cardinality(budget),
    )
    dual_enum = weight_enumerator(code.dual(budget), WeightKind.LEE, budget)
    return IdentityConditions(
        bijective_gray=is_bijective_extension(gmap),
        transform_is_enumerator=is_nonneg_integer_poly(transformed)
        and transformed.coefficient(0) == 1,
        dual_match=poly_equal(transformed, dual_enum),
    )
