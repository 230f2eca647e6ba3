"""Exact homogeneous bivariate polynomials with rational coefficients.

A polynomial of degree D is stored as the coefficient list c_0 ... c_D of
sum_i c_i x^(D-i) y^i. All coefficients are fractions.Fraction, so equality
checks are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import DegreeMismatch


class HomoPoly:
    """Homogeneous polynomial sum_i coeffs[i] * x^(D-i) * y^i."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs: Iterable[int | Fraction]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a homogeneous polynomial needs degree + 1 coefficients")
        self.degree: int = len(cs) - 1
        self.coeffs: tuple[Fraction, ...] = cs

    @classmethod
    def zero(cls, degree: int) -> "HomoPoly":
        return cls([Fraction(0)] * (degree + 1))

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, x: int | Fraction, y: int | Fraction) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        D = self.degree
        return sum((c * x ** (D - i) * y**i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "HomoPoly") -> "HomoPoly":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return HomoPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "HomoPoly") -> "HomoPoly":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        return HomoPoly(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self) -> str:
        return f"HomoPoly({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)


def poly_equal(p: HomoPoly, q: HomoPoly) -> bool:
    """True iff degrees match and all coefficients agree exactly."""
    return p.degree == q.degree and p.coeffs == q.coeffs


def poly_sub(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    return p - q


def is_nonneg_integer_poly(p: HomoPoly) -> bool:
    """True iff every coefficient is a nonnegative integer."""
    return all(c.denominator == 1 and c >= 0 for c in p.coeffs)


def substitute_transform(p: HomoPoly, multiplier: int, scale: int) -> HomoPoly:
    """Expand (1/scale) * p(x + (multiplier-1) y, x - y) exactly.

    This is the substitution behind MacWilliams-style transforms; the degree
    is preserved and coefficients stay exact rationals.
    """
    t = int(multiplier)
    s = int(scale)
    if t < 1:
        raise ValueError(f"multiplier must be >= 1, got {multiplier}")
    if s < 1:
        raise ValueError(f"scale must be a positive integer, got {scale}")
    D = p.degree
    out = [Fraction(0)] * (D + 1)
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        a, b = D - i, i
        # (x + (t-1)y)^a * (x - y)^b, gathered by total y-power
        first = [comb(a, u) * (t - 1) ** u for u in range(a + 1)]
        second = [comb(b, v) * (-1) ** v for v in range(b + 1)]
        for u, fu in enumerate(first):
            if fu == 0:
                continue
            cf = c * fu
            for v, sv in enumerate(second):
                out[u + v] += cf * sv
    return HomoPoly(c / s for c in out)


def to_text(p: HomoPoly) -> str:
    """Serialize as ``deg D; i:c ...`` listing only nonzero coefficients.

    Rationals print as num/den, integers without the /1.
    """
    terms = [f"{i}:{c}" for i, c in enumerate(p.coeffs) if c != 0]
    head = f"deg {p.degree};"
    return " ".join([head] + terms) if terms else head


def from_text(text: str) -> HomoPoly:
    """Parse the ``deg D; i:c ...`` polynomial format."""
    head, _, tail = text.strip().partition(";")
    parts = head.split()
    if len(parts) != 2 or parts[0] != "deg":
        raise ValueError(f"polynomial text must start with 'deg D;', got {text!r}")
    degree = int(parts[1])
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    coeffs = [Fraction(0)] * (degree + 1)
    seen: set[int] = set()
    for term in tail.split():
        idx_str, _, coeff_str = term.partition(":")
        if not coeff_str:
            raise ValueError(f"malformed term {term!r}")
        i = int(idx_str)
        if not 0 <= i <= degree:
            raise ValueError(f"term index {i} outside 0..{degree}")
        if i in seen:
            raise ValueError(f"duplicate term index {i}")
        seen.add(i)
        coeffs[i] = Fraction(coeff_str)
    return HomoPoly(coeffs)
