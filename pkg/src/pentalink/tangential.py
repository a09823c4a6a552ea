"""Inradii and areas of tangential polygons with odd side counts.

Two independent routes to the pentagon inradii are provided: the closed-form
biquadratic in r^2 built from symmetric functions of the tangent lengths, and
bisection on the inverse-tangent angle equation.  They must agree, which the
test suite uses as a cross-check.  Coefficients are exact rationals; root
extraction is the only floating-point step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Number, SymmetricFunctions, TangentLengths, elementary_symmetric, to_exact
from .errors import (
    NegativeDiscriminantError,
    NonPositiveTangentLengthError,
    NoSolutionError,
    PentalinkError,
)

# Bisection policy for the angle equation: hard bracket, fixed budget.
ARCTAN_REL_TOL = 1e-12
ARCTAN_MAX_ITER = 200


@dataclass(frozen=True)
class SylvesterPolynomial:
    """Inradius polynomial in x = r^2 for a tangential polygon with odd n.

    Degree k = (n-1)/2 with coefficients (s_1, -s_3, s_5, ...) alternating in
    sign; its positive roots are the squared inradii of the tangential
    configurations.
    """

    coefficients: tuple[Number, ...]
    n: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class InradiusPair:
    """The two pentagon inradii: convex (larger root) and star (smaller)."""

    r_convex: float
    r_star: float
    discriminant: Number


def _require_positive(t: TangentLengths) -> None:
    bad = t.nonpositive_indices()
    if bad:
        raise NonPositiveTangentLengthError(
            f"tangent lengths at 0-based indices {list(bad)} are not positive"
        )


def sylvester_polynomial(t: TangentLengths) -> SylvesterPolynomial:
    """Build the inradius polynomial s_1 x^k - s_3 x^{k-1} + ... from t.

    Exact when the tangent lengths are rational.
    """
    if t.n % 2 == 0:
        raise PentalinkError("inradius polynomial needs an odd side count")
    _require_positive(t)
    s = elementary_symmetric(t.values)
    k = (t.n - 1) // 2
    coeffs = tuple(s[2 * j + 1] if j % 2 == 0 else -s[2 * j + 1] for j in range(k + 1))
    return SylvesterPolynomial(coefficients=coeffs, n=t.n)


def _exact_symmetric(t: TangentLengths) -> SymmetricFunctions:
    return elementary_symmetric(tuple(to_exact(v) for v in t.values))


def pentagon_inradii(t: TangentLengths) -> InradiusPair:
    """Both positive roots of s_1 r^4 - s_3 r^2 + s_5 = 0 (n = 5 only).

    The quadratic in y = r^2 is solved in closed form with the numerically
    stable pairing (the smaller root comes from the product of roots), after
    deciding the discriminant sign exactly.
    """
    if t.n != 5:
        raise PentalinkError(f"pentagon inradii need n = 5, got n = {t.n}")
    _require_positive(t)
    s = _exact_symmetric(t)
    s1, s3, s5 = s[1], s[3], s[5]
    disc = s3 * s3 - 4 * s1 * s5
    if disc < 0:
        raise NegativeDiscriminantError(
            "inradius biquadratic has complex roots; no tangential pentagon "
            f"(discriminant {float(disc)!r})"
        )
    sq = math.sqrt(float(disc))
    y_big = (float(s3) + sq) / (2 * float(s1))
    y_small = 2 * float(s5) / (float(s3) + sq)
    pair_disc: Number = disc if t.is_exact else float(disc)
    return InradiusPair(
        r_convex=math.sqrt(y_big),
        r_star=math.sqrt(y_small),
        discriminant=pair_disc,
    )


def arctan_sum(t: TangentLengths, r: float) -> float:
    """The total turning half-angle sum(arctan(t_i / r)); decreasing in r."""
    return math.fsum(math.atan(float(v) / r) for v in t.values)


def arctan_inradius(t: TangentLengths, winding: int) -> float:
    """The unique r > 0 with sum(arctan(t_i / r)) = winding * pi.

    winding 1 is the convex configuration, winding 2 the pentagram-like star.
    The left side decreases strictly from n*pi/2 to 0, so a sign-checked
    bisection on [eps*min(t), n*max(t)] always converges.
    """
    _require_positive(t)
    if not isinstance(winding, int) or winding < 1:
        raise PentalinkError(f"winding must be a positive integer, got {winding!r}")
    n = t.n
    if 2 * winding >= n:
        raise NoSolutionError(
            f"winding {winding} needs an angle sum of {winding}*pi, but n = {n} "
            f"sides can only reach {n}*pi/2"
        )
    target = winding * math.pi
    values = [float(v) for v in t.values]
    lo = 1e-9 * min(values)
    hi = n * max(values)
    f_lo = arctan_sum(t, lo) - target
    f_hi = arctan_sum(t, hi) - target
    if not (f_lo > 0 > f_hi):
        raise NoSolutionError(
            f"bisection bracket failed for winding {winding}: "
            f"f({lo!r}) = {f_lo!r}, f({hi!r}) = {f_hi!r}"
        )
    for _ in range(ARCTAN_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if arctan_sum(t, mid) - target > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= ARCTAN_REL_TOL * hi:
            break
    return 0.5 * (lo + hi)


def tangential_area(r: float, p: float) -> float:
    """Oriented area of a tangential configuration: A = r * p.

    For winding-2 stars the doubly covered core counts twice, which is
    exactly what the product gives.
    """
    if not r > 0 or not p > 0:
        raise PentalinkError("inradius and semiperimeter must be positive")
    return float(r) * float(p)
