"""Bicentric configurations of pentagonal linkages.

The decision pipeline: rewrite the inradius biquadratic in the squared-area
variable u = 16*A^2 (a quadratic, here called the area Sylvester polynomial),
then a configuration that is both tangential and cyclic forces a common root
of that quadratic and the degree-7 cyclic-area polynomial.  The vanishing of
their resultant is therefore a necessary condition, computed exactly.  The
sufficient checks compare 16*(r*p)^2 for the convex and star tangential
configurations against the cyclic-area roots; for rational sides a claimed
match is confirmed exactly through the polynomial gcd, never by float
proximity alone.

Resultant vanishing by itself never sets a verdict: a linkage can satisfy it
without any tangential-cyclic coincidence of the right kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import ratpoly
from .chordal import RobbinsPolynomial, RootSet, real_roots, robbins_polynomial
from .core import (
    Linkage,
    Number,
    TangentLengths,
    as_linkage,
    elementary_symmetric,
    semiperimeter,
    tangent_lengths,
    to_exact,
)
from .errors import NotTangentialError, PentalinkError
from .tangential import pentagon_inradii

RESULTANT_REL_TOL = 1e-6
ROOT_MATCH_REL_TOL = 1e-7


@dataclass(frozen=True)
class SylvesterAreaPolynomial:
    """The inradius biquadratic rewritten in u = 16*A^2 via A = r*p.

    Substituting r = A/p and clearing denominators gives
    s_1 u^2 - 16 p^2 s_3 u + 256 p^4 s_5, whose two roots are 16*(r*p)^2 for
    the convex and star inradii.  Any nonzero rescaling would do; this one
    keeps denominators tiny for rational sides.
    """

    coefficients: tuple[Fraction, Fraction, Fraction]
    semiperimeter: Fraction

    def evaluate(self, u) -> Fraction:
        return ratpoly.eval_at(list(self.coefficients), to_exact(u))

    def roots(self) -> tuple[float, float]:
        """(u_convex, u_star), largest first, via the stable quadratic formula."""
        c2, c1, c0 = self.coefficients
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            raise PentalinkError("area quadratic has complex roots")
        sq = math.sqrt(float(disc))
        big = (-float(c1) + sq) / (2 * float(c2))
        small = 2 * float(c0) / (-float(c1) + sq)
        return big, small


def sylvester_area_polynomial(t: TangentLengths, p: Number) -> SylvesterAreaPolynomial:
    """Exact area quadratic from tangent lengths and the semiperimeter."""
    s = elementary_symmetric(tuple(to_exact(v) for v in t.values))
    pe = to_exact(p)
    return SylvesterAreaPolynomial(
        coefficients=(s[1], -16 * pe * pe * s[3], 256 * pe**4 * s[5]),
        semiperimeter=pe,
    )


def _int_log(n: int) -> float:
    """Natural log of a positive integer of any size."""
    shift = max(0, n.bit_length() - 53)
    return math.log(n >> shift) + shift * math.log(2.0)


def _log_abs(x: Fraction) -> float:
    """log|x| that survives fractions far beyond float range."""
    if x == 0:
        return -math.inf
    return _int_log(abs(x.numerator)) - _int_log(x.denominator)


def _log_l2_norm(coeffs) -> float:
    logs = [2.0 * _log_abs(c) for c in coeffs if c != 0]
    top = max(logs)
    return 0.5 * (top + math.log(math.fsum(math.exp(v - top) for v in logs)))


def _resultant_is_zero(res: Fraction, s_poly, h_poly, exact: bool, rel_tol: float) -> bool:
    """Exact test for rational sides; a norm-scaled magnitude test for floats.

    The float test compares |Res| against rel_tol times the standard bound
    prod of coefficient 2-norms raised to the opposite degrees, evaluated in
    log space so huge coefficients cannot overflow.
    """
    if exact:
        return res == 0
    if res == 0:
        return True
    log_bound = (
        ratpoly.degree(list(h_poly)) * _log_l2_norm(s_poly)
        + ratpoly.degree(list(s_poly)) * _log_l2_norm(h_poly)
    )
    return _log_abs(res) <= math.log(rel_tol) + log_bound


@dataclass(frozen=True)
class BicentricCheck:
    """Outcome of one bicentricity check (convex or star).

    ``u_value`` is 16*(r*p)^2 for the tangential configuration under test and
    ``compared_root`` the cyclic-area root it was held against (the maximal
    root for the convex check, the nearest root for the star check), so a
    failed check still carries both numbers.
    """

    holds: bool
    reason: str
    inradius: Optional[float] = None
    area: Optional[float] = None
    u_value: Optional[float] = None
    compared_root: Optional[float] = None
    compared_root_index: Optional[int] = None
    relative_gap: Optional[float] = None
    exact_match: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class BicentricReport:
    """Aggregated verdicts and witnesses for one pentagonal linkage."""

    sides: tuple[Number, ...]
    tangential: bool
    tangent_lengths: TangentLengths
    violations: tuple[int, ...]
    resultant: Optional[Fraction]
    resultant_zero: Optional[bool]
    convex: BicentricCheck
    star: BicentricCheck
    roots: Optional[RootSet]
    exact_arithmetic: bool

    @property
    def convex_bicentric(self) -> bool:
        return self.convex.holds

    @property
    def star_bicentric(self) -> bool:
        return self.star.holds


class _Context:
    """Shared computation for the checks so analyze() does the work once."""

    def __init__(self, sides: "Linkage | Sequence[Number]"):
        self.linkage = as_linkage(sides)
        if self.linkage.n != 5:
            raise PentalinkError(f"bicentric analysis needs n = 5, got {self.linkage.n}")
        self.t = tangent_lengths(self.linkage)
        self.violations = self.t.nonpositive_indices()
        self.tangential = not self.violations
        self.exact = self.linkage.is_exact
        self._h: Optional[RobbinsPolynomial] = None
        self._rootset: Optional[RootSet] = None
        self._s: Optional[SylvesterAreaPolynomial] = None

    @property
    def h(self) -> RobbinsPolynomial:
        if self._h is None:
            self._h = robbins_polynomial(self.linkage)
        return self._h

    @property
    def rootset(self) -> RootSet:
        if self._rootset is None:
            self._rootset = real_roots(self.h)
        return self._rootset

    @property
    def s(self) -> SylvesterAreaPolynomial:
        if self._s is None:
            exact_t = TangentLengths(tuple(to_exact(v) for v in self.t.values))
            self._s = sylvester_area_polynomial(exact_t, to_exact(semiperimeter(self.linkage)))
        return self._s


def _exact_quadratic_root_is_common(
    s_poly: SylvesterAreaPolynomial, h_poly: RobbinsPolynomial, which: str
) -> bool:
    """Is the larger ('convex') or smaller ('star') root of the area quadratic
    exactly a root of the degree-7 polynomial?

    Decided entirely in rational arithmetic: a gcd of degree 2 shares both
    roots, degree 1 pins a rational common root whose position among the two
    quadratic roots is compared exactly, and a double quadratic root reduces
    to direct evaluation.
    """
    c2, c1, c0 = s_poly.coefficients
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return False
    h = list(h_poly.coefficients)
    if disc == 0:
        v = Fraction(-c1, 2 * c2)
        return ratpoly.eval_at(h, v) == 0
    g = ratpoly.poly_gcd([c2, c1, c0], h)
    deg = ratpoly.degree(g)
    if deg <= 0:
        return False
    if deg >= 2:
        return True
    common = -g[1]  # g is monic linear: u + g[1]
    other = -Fraction(c1, c2) - common
    return (common >= other) if which == "convex" else (common <= other)


def resultant_condition(
    sides: "Linkage | Sequence[Number]", tolerance: float = RESULTANT_REL_TOL
) -> tuple[Fraction, bool]:
    """Exact resultant of the area quadratic and the degree-7 area polynomial.

    Returns (value, is_zero).  Zero is necessary for any bicentric
    configuration to exist.  Raises when the linkage is not tangential, since
    the quadratic then has no geometric meaning.
    """
    ctx = _Context(sides)
    if not ctx.tangential:
        raise NotTangentialError(
            f"no tangential configuration: tangent lengths at 0-based indices "
            f"{list(ctx.violations)} are not positive"
        )
    res = ratpoly.resultant(list(ctx.s.coefficients), list(ctx.h.coefficients))
    return res, _resultant_is_zero(res, ctx.s.coefficients, ctx.h.coefficients, ctx.exact, tolerance)


def _nearest_root(u: float, rootset: RootSet) -> tuple[int, float]:
    """Index and relative gap of the root closest to u."""
    best_i, best_gap = 0, math.inf
    for i, root in enumerate(rootset.roots):
        gap = abs(u - root.value) / max(abs(u), abs(root.value), 1e-300)
        if gap < best_gap:
            best_i, best_gap = i, gap
    return best_i, best_gap


def _check(ctx: _Context, which: str, tolerance: float) -> BicentricCheck:
    if not ctx.tangential:
        return BicentricCheck(
            holds=False,
            reason=f"not tangential (non-positive tangent lengths at {list(ctx.violations)})",
        )
    pair = pentagon_inradii(ctx.t)
    r = pair.r_convex if which == "convex" else pair.r_star
    p = float(semiperimeter(ctx.linkage))
    area = r * p
    u = 16.0 * area * area
    rootset = ctx.rootset
    if which == "convex":
        idx = len(rootset.roots) - 1
        root = rootset.max_root.value
        gap = abs(u - root) / max(abs(root), 1e-300)
    else:
        idx, gap = _nearest_root(u, rootset)
        root = rootset.roots[idx].value
    matched = gap <= tolerance
    exact_flag: Optional[bool] = None
    if ctx.exact:
        # float proximity proposes, rational arithmetic disposes
        exact_flag = _exact_quadratic_root_is_common(ctx.s, ctx.h, which)
        if which == "convex":
            exact_flag = exact_flag and matched  # common root must also be maximal
        matched = exact_flag
    if which == "convex":
        reason = (
            "convex tangential area matches the maximal cyclic-area root"
            if matched
            else "convex tangential area differs from the maximal cyclic-area root"
        )
    else:
        reason = (
            "star tangential area matches a cyclic-area root"
            if matched
            else "star tangential area matches no cyclic-area root"
        )
    return BicentricCheck(
        holds=matched,
        reason=reason,
        inradius=r,
        area=area,
        u_value=u,
        compared_root=root,
        compared_root_index=idx,
        relative_gap=gap,
        exact_match=exact_flag,
    )


def convex_bicentric_check(
    sides: "Linkage | Sequence[Number]", tolerance: float = ROOT_MATCH_REL_TOL
) -> BicentricCheck:
    """Does the convex tangential configuration close up on a circumcircle?

    True iff the tangent lengths are positive and 16*(r_convex*p)^2 equals
    the maximal root of the cyclic-area polynomial (within tolerance; exactly,
    for rational sides).
    """
    return _check(_Context(sides), "convex", tolerance)


def star_bicentric_check(
    sides: "Linkage | Sequence[Number]", tolerance: float = ROOT_MATCH_REL_TOL
) -> BicentricCheck:
    """Same test for the star configuration against any cyclic-area root."""
    return _check(_Context(sides), "star", tolerance)


def analyze(
    sides: "Linkage | Sequence[Number]",
    tolerance: float = ROOT_MATCH_REL_TOL,
    resultant_tolerance: float = RESULTANT_REL_TOL,
) -> BicentricReport:
    """Full bicentricity report: tangentiality, resultant, both checks.

    A non-tangential linkage short-circuits: no resultant is computed and
    both verdicts are false.
    """
    ctx = _Context(sides)
    if not ctx.tangential:
        missing = BicentricCheck(
            holds=False,
            reason=f"not tangential (non-positive tangent lengths at {list(ctx.violations)})",
        )
        return BicentricReport(
            sides=ctx.linkage.sides,
            tangential=False,
            tangent_lengths=ctx.t,
            violations=ctx.violations,
            resultant=None,
            resultant_zero=None,
            convex=missing,
            star=missing,
            roots=None,
            exact_arithmetic=ctx.exact,
        )
    res = ratpoly.resultant(list(ctx.s.coefficients), list(ctx.h.coefficients))
    res_zero = _resultant_is_zero(
        res, ctx.s.coefficients, ctx.h.coefficients, ctx.exact, resultant_tolerance
    )
    convex = _check(ctx, "convex", tolerance)
    star = _check(ctx, "star", tolerance)
    return BicentricReport(
        sides=ctx.linkage.sides,
        tangential=True,
        tangent_lengths=ctx.t,
        violations=(),
        resultant=res,
        resultant_zero=res_zero,
        convex=convex,
        star=star,
        roots=ctx.rootset,
        exact_arithmetic=ctx.exact,
    )
