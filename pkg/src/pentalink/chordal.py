"""Areas of chordal (cyclic) pentagons via the degree-7 area polynomial.

The Robbins polynomial is the monic degree-7 polynomial in u = 16*A^2 whose
real roots carry the oriented areas of all cyclic pentagons with the given
sides; its maximal root belongs to the convex configuration.  Coefficients
are built in exact rational arithmetic (integer sides give integer
coefficients in the 10^46 range already for sides around 30), and roots are
isolated by Sturm sequences before any floating point enters.

Side lists here may contain zeros: padding a quadrilateral with a zero fifth
side degenerates the polynomial to the Brahmagupta case, which is a useful
cross-check and is exercised by the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ratpoly
from .core import Linkage, Number, is_exact, to_exact
from .errors import AllZeroSidesError, NonPositiveSideError, NotClosableError, PentalinkError
from .ratpoly import IsolatedRoot

ROOT_REL_TOL = 1e-12


def _five_sides(sides: "Linkage | Sequence[Number]") -> tuple[Number, ...]:
    """Accept a Linkage or a raw length-5 sequence; zeros allowed, negatives not."""
    vals = tuple(sides.sides) if isinstance(sides, Linkage) else tuple(sides)
    if len(vals) != 5:
        raise PentalinkError(f"need exactly 5 sides, got {len(vals)}")
    for i, a in enumerate(vals):
        if isinstance(a, float) and not math.isfinite(a):
            raise NonPositiveSideError(f"side {i + 1} is not finite: {a!r}")
        if a < 0:
            raise NonPositiveSideError(f"side {i + 1} is negative: {a!r}")
    if all(a == 0 for a in vals):
        raise AllZeroSidesError("all five sides are zero")
    return vals


@dataclass(frozen=True)
class RobbinsPolynomial:
    """Monic degree-7 polynomial in u = 16*A^2 for a cyclic pentagon.

    ``squared_side_symmetrics`` are the five elementary symmetric functions
    e_1..e_5 of the squared sides, from which the coefficients derive.
    """

    coefficients: tuple[Fraction, ...]
    squared_side_symmetrics: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def evaluate(self, u) -> Fraction:
        return ratpoly.eval_at(list(self.coefficients), to_exact(u))


@dataclass(frozen=True)
class RootSet:
    """Distinct real roots with multiplicities and exact isolating intervals."""

    roots: tuple[IsolatedRoot, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i: int) -> IsolatedRoot:
        return self.roots[i]

    @property
    def count_with_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(r.value for r in self.roots)

    @property
    def max_root(self) -> IsolatedRoot:
        if not self.roots:
            raise PentalinkError("empty root set has no maximal root")
        return self.roots[-1]


def robbins_polynomial(sides: "Linkage | Sequence[Number]") -> RobbinsPolynomial:
    """Build the exact area polynomial for five sides.

    The construction runs through ladder polynomials in u with coefficients
    drawn from the symmetric functions of the squared sides; the result is
    asserted monic of degree 7 (a structural identity of the construction).
    """
    vals = _five_sides(sides)
    sq = [to_exact(a) ** 2 for a in vals]
    e: list[Fraction] = [Fraction(0)] * 6
    e[0] = Fraction(1)
    for v in sq:
        for k in range(5, 0, -1):
            e[k] += e[k - 1] * v
    e1, e2, e3, e4, e5 = e[1:]

    # Ladder in u: q3 linear, q4 quadratic (monic), q5 constant.
    q3 = [e1, e1 * (e1 * e1 - 4 * e2) + 8 * e3]
    q4 = [
        Fraction(1),
        2 * e1 * e1 - 8 * e2,
        e1**4 - 8 * e1 * e1 * e2 + 16 * e2 * e2 - 64 * e4,
    ]
    q5 = 128 * e5

    u = [Fraction(1), Fraction(0)]
    poly = ratpoly.scale([Fraction(1), Fraction(0), Fraction(0)], -27 * q5 * q5)
    poly = ratpoly.add(poly, ratpoly.scale(ratpoly.mul(u, ratpoly.mul(q3, q4)), -18 * q5))
    poly = ratpoly.add(poly, ratpoly.mul(u, ratpoly.mul(q4, ratpoly.mul(q4, q4))))
    poly = ratpoly.add(poly, ratpoly.scale(ratpoly.mul(q3, ratpoly.mul(q3, q3)), -16 * q5))
    poly = ratpoly.add(poly, ratpoly.mul(ratpoly.mul(q3, q3), ratpoly.mul(q4, q4)))

    if ratpoly.degree(poly) != 7 or poly[0] != 1:
        raise AssertionError("area polynomial construction lost monicity or degree")
    return RobbinsPolynomial(
        coefficients=tuple(poly),
        squared_side_symmetrics=(e1, e2, e3, e4, e5),
    )


def real_roots(
    poly: "RobbinsPolynomial | Sequence",
    domain: tuple = (0, None),
    tolerance: float = ROOT_REL_TOL,
) -> RootSet:
    """Isolate and refine the real roots of a polynomial on (lo, hi].

    ``domain`` endpoints of None mean unbounded; the default (0, None) is the
    physically meaningful range for u = 16*A^2.
    """
    coeffs = list(poly.coefficients) if isinstance(poly, RobbinsPolynomial) else ratpoly.normalize(poly)
    if not coeffs:
        raise PentalinkError("cannot isolate roots of the zero polynomial")
    lo, hi = domain
    found = ratpoly.real_roots(coeffs, lo=lo, hi=hi, rel_tol=tolerance)
    return RootSet(roots=tuple(found))


def _closable(vals: Sequence[Number]) -> None:
    total = sum(to_exact(a) for a in vals)
    for i, a in enumerate(vals):
        if 2 * to_exact(a) >= total:
            raise NotClosableError(
                f"side {i + 1} ({a!r}) is at least the sum of the others; "
                "no closed polygon exists"
            )


def convex_cyclic_area(sides: "Linkage | Sequence[Number]") -> float:
    """Area of the convex cyclic pentagon: sqrt(u_max) / 4 from the max root."""
    vals = _five_sides(sides)
    _closable(vals)
    rootset = real_roots(robbins_polynomial(vals))
    if not rootset.roots:
        raise PentalinkError("area polynomial has no positive real root")  # pragma: no cover
    return math.sqrt(rootset.max_root.value) / 4


def ghp_degree(n: int) -> int:
    """Degree of the generalized Heron polynomial for a cyclic n-gon.

    Uses Delta_k = (2k+1) * C(2k, k) / 2 - 2^(2k-1): n = 2k+1 gives Delta_k,
    n = 2k+2 gives 2*Delta_k.  Checks: n=3 -> 1 (Heron), n=5 -> 7.
    """
    if n < 3:
        raise PentalinkError(f"need n >= 3, got {n}")
    k = (n - 1) // 2
    delta = (2 * k + 1) * math.comb(2 * k, k) // 2 - 2 ** (2 * k - 1)
    return delta if n % 2 == 1 else 2 * delta
