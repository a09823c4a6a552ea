import math
import random
from fractions import Fraction

import pytest

from pentalink import (
    DegenerateQuadError,
    NonPositiveSideError,
    PitotViolatedError,
    incircle_fit,
    is_kite,
    max_inradius,
    min_inradius,
    pitot_check,
    quad_report,
    reconstruct_cyclic,
)

F = Fraction


def heron_inradius(a, b, c):
    """Independent oracle: triangle inradius from Heron's formula."""
    s = (a + b + c) / 2
    area_sq = s * (s - a) * (s - b) * (s - c)
    if area_sq <= 0:
        return None
    return math.sqrt(float(area_sq)) / float(s)


def aligned_min_oracle(sides):
    """Fuse each adjacent pair into one collinear side; min Heron inradius."""
    best = None
    for i in range(4):
        fused = sides[i] + sides[(i + 1) % 4]
        r = heron_inradius(float(fused), float(sides[(i + 2) % 4]), float(sides[(i + 3) % 4]))
        if r is not None and (best is None or r < best):
            best = r
    return best


def rand_pitot_quad(rng, kite_free=True):
    while True:
        a1 = F(rng.randint(1, 40), rng.randint(1, 4))
        a2 = F(rng.randint(1, 40), rng.randint(1, 4))
        a3 = F(rng.randint(1, 40), rng.randint(1, 4))
        a4 = a1 + a3 - a2
        if a4 <= 0:
            continue
        sides = [a1, a2, a3, a4]
        total = sum(sides)
        if any(2 * s >= total for s in sides):
            continue
        if kite_free and is_kite(sides):
            continue
        return sides


class TestPitot:
    def test_square(self):
        assert pitot_check([1, 1, 1, 1])

    def test_kite(self):
        assert pitot_check([2, 2, 3, 3])

    def test_violation(self):
        assert not pitot_check([3, 2, 3, 1])

    def test_float_tolerance(self):
        assert pitot_check([1.0, 2.0, 3.0, 2.0])
        assert not pitot_check([1.0, 2.0, 3.0, 2.0001])

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateQuadError):
            pitot_check([10, 1, 2, 3])

    def test_nonpositive_rejected(self):
        with pytest.raises(NonPositiveSideError):
            pitot_check([1, -1, 1, 1])


class TestKite:
    def test_examples(self):
        assert is_kite([2, 2, 3, 3])
        assert is_kite([1, 2, 2, 1])
        assert is_kite([1, 1, 1, 1])
        assert not is_kite([1, 2, 3, 2])

    def test_rotation_invariance(self):
        rng = random.Random(41)
        for _ in range(50):
            sides = [F(rng.randint(1, 9)) for _ in range(4)]
            total = sum(sides)
            if any(2 * s >= total for s in sides):
                continue
            flags = set()
            for r in range(4):
                flags.add(is_kite(sides[r:] + sides[:r]))
            assert len(flags) == 1


class TestMaxInradius:
    def test_unit_square(self):
        assert max_inradius([1, 1, 1, 1]) == pytest.approx(0.5, rel=1e-12)

    def test_kite_example(self):
        # p = 5, sqrt(3*3*2*2)/5 = 6/5
        assert max_inradius([2, 2, 3, 3]) == pytest.approx(1.2, rel=1e-12)

    def test_scaling(self):
        base = max_inradius([1, 2, 3, 2])
        assert max_inradius([3, 6, 9, 6]) == pytest.approx(3 * base, rel=1e-12)

    def test_equals_brahmagupta_area_over_p(self):
        rng = random.Random(42)
        for _ in range(30):
            sides = rand_pitot_quad(rng, kite_free=False)
            p = float(sum(sides)) / 2
            brahmagupta = math.sqrt(math.prod(p - float(s) for s in sides))
            assert max_inradius(sides) == pytest.approx(brahmagupta / p, rel=1e-12)

    def test_pitot_required(self):
        with pytest.raises(PitotViolatedError):
            max_inradius([3, 2, 3, 1])


class TestMinInradius:
    def test_kites_collapse(self):
        assert min_inradius([2, 2, 3, 3]) == 0.0
        assert min_inradius([1, 2, 2, 1]) == 0.0
        assert min_inradius([1, 1, 1, 1]) == 0.0

    def test_non_kite_example(self):
        # aligned triangles of (1,2,3,2) are (3,3,2) and (3,2,3)
        got = min_inradius([1, 2, 3, 2])
        assert got == pytest.approx(aligned_min_oracle([F(1), F(2), F(3), F(2)]), rel=1e-12)
        assert got == pytest.approx(1 / math.sqrt(2), rel=1e-12)

    def test_random_non_kites_match_oracle(self):
        rng = random.Random(43)
        for _ in range(30):
            sides = rand_pitot_quad(rng)
            assert min_inradius(sides) == pytest.approx(aligned_min_oracle(sides), rel=1e-12)

    def test_below_max(self):
        rng = random.Random(44)
        for _ in range(30):
            sides = rand_pitot_quad(rng)
            assert min_inradius(sides) <= max_inradius(sides) + 1e-15

    def test_pitot_required(self):
        with pytest.raises(PitotViolatedError):
            min_inradius([3, 2, 3, 1])


class TestQuadReport:
    def test_kite_report(self):
        report = quad_report([2, 2, 3, 3])
        assert report.pitot and report.is_kite
        assert report.r_min == 0.0
        assert report.r_max == pytest.approx(1.2)

    def test_non_pitot_report(self):
        report = quad_report([3, 2, 3, 1])
        assert not report.pitot
        assert report.is_kite is None and report.r_min is None and report.r_max is None

    def test_invariants(self):
        rng = random.Random(45)
        for _ in range(20):
            sides = rand_pitot_quad(rng, kite_free=False)
            report = quad_report(sides)
            assert report.pitot
            assert report.r_min <= report.r_max
            if report.is_kite:
                assert report.r_min == 0.0


class TestAgainstGeometricOracle:
    def test_max_inradius_is_cyclic_incircle(self):
        # the largest-inradius member of the tangential family is the cyclic
        # one; rebuild it from coordinates and fit its incircle
        for sides in ([2, 2, 3, 3], [1, 2, 3, 2], [F(5, 2), F(7, 2), F(9, 2), F(7, 2)]):
            config, _ = reconstruct_cyclic([float(s) for s in sides], winding=1)
            fit = incircle_fit(config)
            assert fit.residual <= 1e-9 * fit.circle.radius
            assert fit.tangency_inside
            assert fit.circle.radius == pytest.approx(max_inradius(sides), rel=1e-9)
