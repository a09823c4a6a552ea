"""Quadrilateral linkages: Pitot criterion and the extremal inradii.

A quadrilateral linkage with a_1 + a_3 = a_2 + a_4 has a whole continuum of
tangential configurations.  The largest inradius belongs to the cyclic member
(Brahmagupta area over the semiperimeter); the smallest is zero for kites,
which collapse to a segment, and otherwise the inradius of one of the two
aligned triangles obtained by folding two adjacent sides flat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Number, is_exact, to_exact
from .errors import DegenerateQuadError, NonPositiveSideError, PitotViolatedError

PITOT_REL_TOL = 1e-12


@dataclass(frozen=True)
class QuadReport:
    """Tangential-family summary; the radii are defined only when pitot holds."""

    pitot: bool
    is_kite: Optional[bool]
    r_min: Optional[float]
    r_max: Optional[float]


def _four_sides(sides: Sequence[Number]) -> tuple[Number, ...]:
    vals = tuple(getattr(sides, "sides", sides))
    if len(vals) != 4:
        raise PitotViolatedError(f"need exactly 4 sides, got {len(vals)}")
    for i, a in enumerate(vals):
        if isinstance(a, float) and not math.isfinite(a):
            raise NonPositiveSideError(f"side {i + 1} is not finite: {a!r}")
        if not a > 0:
            raise NonPositiveSideError(f"side {i + 1} is not positive: {a!r}")
    total = sum(to_exact(a) for a in vals)
    for i, a in enumerate(vals):
        if 2 * to_exact(a) >= total:
            raise DegenerateQuadError(
                f"side {i + 1} ({a!r}) is at least the sum of the other three"
            )
    return vals


def _equal(x: Fraction, y: Fraction, scale: Fraction, exact: bool) -> bool:
    if exact:
        return x == y
    return abs(x - y) <= Fraction(PITOT_REL_TOL) * scale


def pitot_check(sides: Sequence[Number]) -> bool:
    """a_1 + a_3 == a_2 + a_4: exact for rational sides, 1e-12 relative for floats."""
    vals = _four_sides(sides)
    a = [to_exact(v) for v in vals]
    return _equal(a[0] + a[2], a[1] + a[3], sum(a), is_exact(vals))


def is_kite(sides: Sequence[Number]) -> bool:
    """Some rotation of the cyclic sequence pairs equal adjacent sides.

    That is the configuration that can fold flat onto a segment, taking the
    incircle with it.
    """
    vals = _four_sides(sides)
    a = [to_exact(v) for v in vals]
    exact = is_exact(vals)
    scale = sum(a)
    for r in range(4):
        b = a[r:] + a[:r]
        if _equal(b[0], b[1], scale, exact) and _equal(b[2], b[3], scale, exact):
            return True
    return False


def max_inradius(sides: Sequence[Number]) -> float:
    """r_max = sqrt((p-a)(p-b)(p-c)(p-d)) / p, the cyclic member's inradius."""
    vals = _four_sides(sides)
    if not pitot_check(vals):
        raise PitotViolatedError(f"{vals!r} fails a1 + a3 = a2 + a4; no incircle exists")
    a = [to_exact(v) for v in vals]
    p = sum(a) / 2
    prod = Fraction(1)
    for v in a:
        prod *= p - v
    return math.sqrt(float(prod)) / float(p)


def _triangle_inradius(x: Fraction, y: Fraction, z: Fraction) -> Optional[float]:
    """Heron inradius, or None when the strict triangle inequality fails."""
    s = (x + y + z) / 2
    prod = (s - x) * (s - y) * (s - z)
    if prod <= 0:
        return None
    return math.sqrt(float(prod * s)) / float(s)


def min_inradius(sides: Sequence[Number]) -> float:
    """Smallest inradius over the tangential family.

    Zero for kites.  Otherwise each way of fusing two cyclically adjacent
    sides into one collinear side leaves a triangle; the minimum of the valid
    triangles' inradii is taken (degenerate alignments are skipped).
    """
    vals = _four_sides(sides)
    if not pitot_check(vals):
        raise PitotViolatedError(f"{vals!r} fails a1 + a3 = a2 + a4; no incircle exists")
    if is_kite(vals):
        return 0.0
    a = [to_exact(v) for v in vals]
    candidates = []
    for i in range(4):
        fused = a[i] + a[(i + 1) % 4]
        r = _triangle_inradius(fused, a[(i + 2) % 4], a[(i + 3) % 4])
        if r is not None:
            candidates.append(r)
    if not candidates:  # pragma: no cover - excluded by the kite test
        return 0.0
    return min(candidates)


def quad_report(sides: Sequence[Number]) -> QuadReport:
    """Pitot verdict plus the inradius range of the tangential family."""
    vals = _four_sides(sides)
    if not pitot_check(vals):
        return QuadReport(pitot=False, is_kite=None, r_min=None, r_max=None)
    return QuadReport(
        pitot=True,
        is_kite=is_kite(vals),
        r_min=min_inradius(vals),
        r_max=max_inradius(vals),
    )
