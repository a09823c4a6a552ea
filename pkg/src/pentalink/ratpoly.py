"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are plain lists of ``Fraction`` coefficients in descending degree
order with no leading zeros; the zero polynomial is the empty list.  On top of
the ring operations this module provides Sturm sequences, square-free (Yun)
decomposition, real-root isolation with bisection refinement on exact rational
interval endpoints, and resultants via fraction-free (Bareiss) determinants,
so coefficient sizes around 10^46 are handled without loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Poly = list[Fraction]

# Sentinels for infinite interval endpoints.
NEG_INF = object()
POS_INF = object()


def normalize(coeffs: Iterable) -> Poly:
    cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    i = 0
    while i < len(cs) and cs[i] == 0:
        i += 1
    return cs[i:]


def degree(f: Sequence[Fraction]) -> int:
    return len(f) - 1


def add(f: Sequence[Fraction], g: Sequence[Fraction]) -> Poly:
    n = max(len(f), len(g))
    fp = [Fraction(0)] * (n - len(f)) + list(f)
    gp = [Fraction(0)] * (n - len(g)) + list(g)
    return normalize(x + y for x, y in zip(fp, gp))


def neg(f: Sequence[Fraction]) -> Poly:
    return [-c for c in f]


def sub(f: Sequence[Fraction], g: Sequence[Fraction]) -> Poly:
    return add(f, neg(g))


def mul(f: Sequence[Fraction], g: Sequence[Fraction]) -> Poly:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return normalize(out)


def scale(f: Sequence[Fraction], c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return []
    return [a * c for a in f]


def eval_at(f: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in f:
        acc = acc * x + c
    return acc


def eval_float(f: Sequence[Fraction], x: float) -> float:
    acc = 0.0
    for c in f:
        acc = acc * x + float(c)
    return acc


def derivative(f: Sequence[Fraction]) -> Poly:
    n = degree(f)
    return normalize(c * (n - i) for i, c in enumerate(f[:-1]))


def div_rem(f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple[Poly, Poly]:
    """Euclidean division over Q: f = q*g + r with deg r < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = normalize(f)
    q = [Fraction(0)] * max(0, len(r) - len(g) + 1)
    while len(r) >= len(g) and r:
        coef = r[0] / g[0]
        pos = len(r) - len(g)
        q[len(q) - 1 - pos] = coef
        for i in range(len(g)):
            r[i] -= coef * g[i]
        r = normalize(r)
    return normalize(q), r


def monic(f: Sequence[Fraction]) -> Poly:
    if not f:
        return []
    lc = f[0]
    return [c / lc for c in f]


def primitive(f: Sequence[Fraction]) -> Poly:
    """Scale by a positive rational so coefficients are coprime integers.

    Sign-preserving, which is what Sturm sequences need.
    """
    if not f:
        return []
    den = 1
    for c in f:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return [Fraction(v // g) for v in ints]


def poly_gcd(f: Sequence[Fraction], g: Sequence[Fraction]) -> Poly:
    """Monic gcd over Q (primitive rescaling keeps the coefficients tame)."""
    a = primitive(normalize(f))
    b = primitive(normalize(g))
    while b:
        _, r = div_rem(a, b)
        a, b = b, primitive(r)
    return monic(a)


def squarefree_part(f: Sequence[Fraction]) -> Poly:
    f = normalize(f)
    if degree(f) < 1:
        return monic(f)
    g = poly_gcd(f, derivative(f))
    if degree(g) == 0:
        return monic(f)
    q, _ = div_rem(f, g)
    return monic(q)


def squarefree_decomposition(f: Sequence[Fraction]) -> list[tuple[Poly, int]]:
    """Yun's algorithm: f = lc * prod(a_i ^ i) with pairwise-coprime a_i.

    Returns the non-trivial (a_i, i) pairs, each a_i monic and square-free.
    """
    f = normalize(f)
    if degree(f) < 1:
        return []
    fp = derivative(f)
    g = poly_gcd(f, fp)
    if degree(g) == 0:
        return [(monic(f), 1)]
    out: list[tuple[Poly, int]] = []
    c, _ = div_rem(f, g)
    d = sub(div_rem(fp, g)[0], derivative(c))
    i = 1
    while degree(c) > 0:
        a = poly_gcd(c, d)
        if degree(a) > 0:
            out.append((monic(a), i))
        c, _ = div_rem(c, a)
        d = sub(div_rem(d, a)[0], derivative(c))
        i += 1
    return out


def sturm_chain(f: Sequence[Fraction]) -> list[Poly]:
    """Canonical Sturm chain of a square-free polynomial.

    Each remainder is rescaled to primitive integer coefficients; positive
    scaling leaves every sign variation untouched while stopping the
    coefficient blow-up of repeated rational division.
    """
    f = primitive(normalize(f))
    chain = [f, primitive(derivative(f))]
    while chain[-1]:
        _, r = div_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive(neg(r)))
    return [p for p in chain if p]


def _sign_at(f: Sequence[Fraction], x) -> int:
    if not f:
        return 0
    if x is POS_INF:
        v = f[0]
    elif x is NEG_INF:
        v = f[0] * (-1) ** degree(f)
    else:
        v = eval_at(f, x)
    return (v > 0) - (v < 0)


def sign_variations(chain: Sequence[Sequence[Fraction]], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: Sequence[Sequence[Fraction]], lo, hi) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_real_roots(f: Sequence[Fraction], lo=NEG_INF, hi=POS_INF) -> int:
    """Distinct real roots of f in (lo, hi]; f need not be square-free."""
    sf = squarefree_part(f)
    if degree(sf) < 1:
        return 0
    return count_roots(sturm_chain(sf), lo, hi)


def _root_magnitude_estimate(f: Sequence[Fraction]) -> Fraction:
    """Fujiwara-style float bound on root magnitudes, rounded up to an integer.

    Only a speed hint; correctness comes from the exact Sturm counts in
    ``_grow_bound``.
    """
    lead = abs(f[0])
    est = 1.0
    for i, c in enumerate(f[1:], start=1):
        if c == 0:
            continue
        ratio = abs(c) / lead
        bits = ratio.numerator.bit_length() - ratio.denominator.bit_length()
        est = max(est, 2.0 * 2.0 ** (bits / i))
    return Fraction(max(1, math.ceil(min(est, 2.0**512))))


def _grow_bound(chain, f: Poly, anchor: Fraction, want: int, positive: bool) -> Fraction:
    """Double a finite bound until all ``want`` roots on one side are inside.

    positive: roots in (anchor, b]; negative: roots in (-b, anchor].
    """
    b = _root_magnitude_estimate(f)
    while True:
        if positive:
            if count_roots(chain, anchor, b) == want:
                return b
        else:
            if count_roots(chain, -b, anchor) == want:
                return -b
        b *= 2


@dataclass(frozen=True)
class IsolatedRoot:
    """One distinct real root: refined float value, multiplicity, and an exact
    rational enclosure (lo == hi when the root was hit exactly)."""

    value: float
    multiplicity: int
    lo: Fraction
    hi: Fraction


def _isolate(chain, f: Poly, lo: Fraction, hi: Fraction, out: list[tuple[Fraction, Fraction]]) -> None:
    """Split (lo, hi] until each piece holds exactly one distinct root of f."""
    n = count_roots(chain, lo, hi)
    if n == 0:
        return
    if n == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    if eval_at(f, mid) == 0:
        out.append((mid, mid))
        # Shrink the left piece away from the exact hit so it is not recounted.
        cut = (lo + mid) / 2
        while count_roots(chain, cut, mid) > 1:
            cut = (cut + mid) / 2
        _isolate(chain, f, lo, cut, out)
        _isolate(chain, f, mid, hi, out)
        return
    _isolate(chain, f, lo, mid, out)
    _isolate(chain, f, mid, hi, out)


def _refine(f: Poly, lo: Fraction, hi: Fraction, rel_tol: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval (lo, hi] of square-free f by bisection."""
    if lo == hi:
        return lo, hi
    s_hi = _sign_at(f, hi)
    if s_hi == 0:
        return hi, hi
    s_lo = _sign_at(f, lo)
    if s_lo == 0:
        # lo is a root of f outside the half-open interval; step right past it
        # but not past the root being refined (sign must flip relative to hi).
        step = (hi - lo) / 16
        while True:
            cand = lo + step
            s = _sign_at(f, cand)
            if s == 0:
                return cand, cand
            if s == -s_hi:
                lo, s_lo = cand, s
                break
            step /= 2
    while hi - lo > rel_tol * max(abs(lo), abs(hi)):
        mid = (lo + hi) / 2
        s = _sign_at(f, mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_roots(
    f: Sequence[Fraction],
    lo=None,
    hi=None,
    rel_tol: float = 1e-12,
) -> list[IsolatedRoot]:
    """All distinct real roots of f in (lo, hi], sorted ascending.

    ``lo``/``hi`` of ``None`` mean -inf/+inf.  Multiplicities come from the
    square-free decomposition; isolation and refinement run entirely in
    rational arithmetic, so clustered roots and giant coefficients are safe.
    """
    f = normalize(f)
    if not f:
        raise ValueError("the zero polynomial has every number as a root")
    if degree(f) == 0:
        return []
    tol = Fraction(rel_tol)
    roots: list[IsolatedRoot] = []
    for factor, mult in squarefree_decomposition(f):
        chain = sturm_chain(factor)
        lo_b = NEG_INF if lo is None else Fraction(lo)
        hi_b = POS_INF if hi is None else Fraction(hi)
        total = sign_variations(chain, lo_b) - sign_variations(chain, hi_b)
        if total == 0:
            continue
        if lo_b is NEG_INF:
            n_below_zero = count_roots(chain, NEG_INF, Fraction(0))
            if n_below_zero == 0:
                lo_b = Fraction(0)
            else:
                lo_b = _grow_bound(chain, factor, Fraction(0), n_below_zero, positive=False)
                while count_roots(chain, lo_b, hi_b) != total:  # root exactly at the bound
                    lo_b -= 1
        if hi_b is POS_INF:
            hi_b = _grow_bound(chain, factor, lo_b, total, positive=True)
        intervals: list[tuple[Fraction, Fraction]] = []
        _isolate(chain, factor, lo_b, hi_b, intervals)
        for a, b in intervals:
            a, b = _refine(factor, a, b, tol)
            roots.append(IsolatedRoot(value=float((a + b) / 2), multiplicity=mult, lo=a, hi=b))
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def sylvester_matrix(f: Sequence[Fraction], g: Sequence[Fraction]) -> list[list[Fraction]]:
    """The (m+n) x (m+n) Sylvester matrix of f (degree m) and g (degree n)."""
    f = normalize(f)
    g = normalize(g)
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        raise ValueError("Sylvester matrix of a zero polynomial")
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(f) + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(g) + [Fraction(0)] * (size - i - n - 1))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    """Res(f, g) as an exact rational via an integer Bareiss determinant.

    Rows of the Sylvester matrix are cleared to integers first and the
    determinant rescaled afterwards, so the value matches the rational
    definition exactly.
    """
    f = normalize(f)
    g = normalize(g)
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        return Fraction(0)
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m

    def cleared(p: Poly) -> tuple[list[int], int]:
        den = 1
        for c in p:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in p], den

    fi, df = cleared(f)
    gi, dg = cleared(g)
    size = m + n
    rows: list[list[int]] = []
    for i in range(n):
        rows.append([0] * i + fi + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + gi + [0] * (size - i - n - 1))
    det = bareiss_determinant(rows)
    return Fraction(det, df**n * dg**m)
