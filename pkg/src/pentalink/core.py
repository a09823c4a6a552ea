"""Core linkage types, the tangent-length system, and symmetric functions.

Two arithmetic backends coexist.  Exact inputs (ints, ``Fraction``) stay in
rational arithmetic end to end; float inputs are routed through the same
rational pipeline (every float is an exact dyadic rational) and converted back
to float on output, so linear identities hold to the last bit either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import EvenSideCountError, NonPositiveSideError, PentalinkError

Number = Union[int, float, Fraction]


def to_exact(x: Number) -> Fraction:
    """Lossless conversion to ``Fraction`` (floats keep their dyadic value)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise PentalinkError(f"non-finite value {x!r}")
        return Fraction(x)
    raise PentalinkError(f"unsupported numeric type {type(x).__name__}")


def is_exact(values: Sequence[Number]) -> bool:
    """True when no entry is a float, i.e. rational arithmetic is intended."""
    return all(not isinstance(v, float) for v in values)


@dataclass(frozen=True)
class Linkage:
    """Closed planar linkage given by its cyclically ordered side lengths.

    Sides are kept in the order given (tangent lengths depend on it) and must
    all be strictly positive.
    """

    sides: tuple[Number, ...]

    def __init__(self, sides: Sequence[Number]):
        sides = tuple(sides)
        if len(sides) < 3:
            raise PentalinkError(f"need at least 3 sides, got {len(sides)}")
        for i, a in enumerate(sides):
            if isinstance(a, float) and not math.isfinite(a):
                raise NonPositiveSideError(f"side {i + 1} is not finite: {a!r}")
            if not a > 0:
                raise NonPositiveSideError(f"side {i + 1} is not positive: {a!r}")
        object.__setattr__(self, "sides", sides)

    @property
    def n(self) -> int:
        return len(self.sides)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.sides)

    def scaled(self, factor: Number) -> "Linkage":
        if not factor > 0:
            raise PentalinkError("scale factor must be positive")
        return Linkage(tuple(a * factor for a in self.sides))


def as_linkage(sides: "Linkage | Sequence[Number]") -> Linkage:
    return sides if isinstance(sides, Linkage) else Linkage(sides)


@dataclass(frozen=True)
class TangentLengths:
    """Solution t_1..t_n of t_j + t_{j+1} = a_j for an odd-sided linkage."""

    values: tuple[Number, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return is_exact(self.values)

    @property
    def all_positive(self) -> bool:
        return all(t > 0 for t in self.values)

    def nonpositive_indices(self) -> tuple[int, ...]:
        """0-based indices of entries that are not strictly positive."""
        return tuple(i for i, t in enumerate(self.values) if not t > 0)


@dataclass(frozen=True)
class SymmetricFunctions:
    """Elementary symmetric functions s_1..s_n of a value list (s_0 == 1)."""

    values: tuple[Number, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Number:
        # 1-based, matching the usual s_k subscripts; s_0 is the constant 1.
        if k == 0:
            return 1
        if not 1 <= k <= len(self.values):
            raise IndexError(f"s_{k} undefined for {len(self.values)} values")
        return self.values[k - 1]


def tangent_lengths(linkage: Linkage | Sequence[Number]) -> TangentLengths:
    """Solve the circulant system t_j + t_{j+1 mod n} = a_j (odd n only).

    The unique solution is the cyclic alternating sum
    t_j = (a_j - a_{j+1} + a_{j+2} - ...) / 2, computed in exact rational
    arithmetic.  For even n the system is singular and an error is raised.
    """
    linkage = as_linkage(linkage)
    if linkage.n % 2 == 0:
        raise EvenSideCountError(
            f"tangent lengths are not unique for n = {linkage.n}; "
            "even side counts have no single solution"
        )
    n = linkage.n
    a = [to_exact(s) for s in linkage.sides]
    vals = [
        sum((a[(j + i) % n] if i % 2 == 0 else -a[(j + i) % n]) for i in range(n))
        / 2
        for j in range(n)
    ]
    if linkage.is_exact:
        return TangentLengths(tuple(vals))
    return TangentLengths(tuple(float(v) for v in vals))


@dataclass(frozen=True)
class TangentialityResult:
    """Outcome of the tangential-configuration test for an odd-sided linkage."""

    tangential: bool
    tangent_lengths: TangentLengths
    violations: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.tangential


def is_tangential(linkage: Linkage | Sequence[Number]) -> TangentialityResult:
    """Does a tangential configuration exist?  (All tangent lengths positive.)

    On failure the 0-based indices of the offending tangent lengths are
    reported alongside the full solution.
    """
    t = tangent_lengths(linkage)
    bad = t.nonpositive_indices()
    return TangentialityResult(not bad, t, bad)


def elementary_symmetric(values: Sequence[Number]) -> SymmetricFunctions:
    """All elementary symmetric functions of ``values`` via the product DP.

    Exact for rational inputs; float inputs are accumulated exactly as well
    and converted back to float at the end.
    """
    values = tuple(values)
    if not values:
        raise PentalinkError("elementary_symmetric needs a non-empty list")
    exact = is_exact(values)
    n = len(values)
    e: list[Fraction] = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for v in values:
        fv = to_exact(v)
        for k in range(n, 0, -1):
            e[k] += e[k - 1] * fv
    if exact:
        return SymmetricFunctions(tuple(e[1:]))
    return SymmetricFunctions(tuple(float(x) for x in e[1:]))


def semiperimeter(linkage: Linkage | Sequence[Number]) -> Number:
    """Half the sum of the sides (exact for rational sides)."""
    linkage = as_linkage(linkage)
    total = sum((to_exact(a) for a in linkage.sides), Fraction(0))
    half = total / 2
    return half if linkage.is_exact else float(half)
