import math
import random
from fractions import Fraction

import pytest

from pentalink import (
    Linkage,
    NotTangentialError,
    TangentLengths,
    analyze,
    convex_bicentric_check,
    pentagon_inradii,
    real_roots,
    resultant_condition,
    robbins_polynomial,
    semiperimeter,
    star_bicentric_check,
    sylvester_area_polynomial,
    tangent_lengths,
)
from pentalink import ratpoly as rp

F = Fraction

UNIT_T = TangentLengths((F(1, 2),) * 5)


def rand_tangential_sides(rng):
    t = [F(rng.randint(1, 300), rng.randint(1, 30)) for _ in range(5)]
    return [t[j] + t[(j + 1) % 5] for j in range(5)]


class TestSylvesterAreaPolynomial:
    def test_unit_coefficients(self):
        s = sylvester_area_polynomial(UNIT_T, F(5, 2))
        assert s.coefficients == (F(5, 2), F(-125), F(625, 2))

    def test_unit_roots(self):
        s = sylvester_area_polynomial(UNIT_T, F(5, 2))
        big, small = s.roots()
        # oracle: quadratic formula on 2.5 u^2 - 125 u + 312.5
        assert big == pytest.approx(25 + math.sqrt(500), rel=1e-12)
        assert small == pytest.approx(25 - math.sqrt(500), rel=1e-12)
        assert big == pytest.approx(47.36067977, rel=1e-8)
        assert small == pytest.approx(2.639320225, rel=1e-8)

    def test_roots_equal_sixteen_rp_squared(self):
        rng = random.Random(31)
        for _ in range(50):
            sides = rand_tangential_sides(rng)
            t = tangent_lengths(Linkage(sides))
            p = semiperimeter(Linkage(sides))
            s = sylvester_area_polynomial(t, p)
            pair = pentagon_inradii(t)
            u_big, u_small = s.roots()
            assert u_big == pytest.approx(16 * (pair.r_convex * float(p)) ** 2, rel=1e-9)
            assert u_small == pytest.approx(16 * (pair.r_star * float(p)) ** 2, rel=1e-9)

    def test_scaling_moves_roots_by_lambda4(self):
        sides = [F(3), F(4), F(5), F(4), F(5)]
        lam = F(3)
        t1 = tangent_lengths(Linkage(sides))
        t2 = tangent_lengths(Linkage([lam * s for s in sides]))
        s1 = sylvester_area_polynomial(t1, semiperimeter(Linkage(sides)))
        s2 = sylvester_area_polynomial(t2, semiperimeter(Linkage([lam * s for s in sides])))
        b1, m1 = s1.roots()
        b2, m2 = s2.roots()
        assert b2 == pytest.approx(float(lam) ** 4 * b1, rel=1e-10)
        assert m2 == pytest.approx(float(lam) ** 4 * m1, rel=1e-10)

    def test_consecutive_pentagon_larger_root(self):
        t = tangent_lengths(Linkage([29, 30, 31, 32, 33]))
        s = sylvester_area_polynomial(t, F(155, 2))
        big, _ = s.roots()
        # oracle: 16 (A1)^2 with A1 = r1 * p from the tangential pipeline
        assert big == pytest.approx(16 * 1648.617494**2, rel=1e-8)


class TestResultantCondition:
    def test_unit_pentagon_exactly_zero(self):
        value, zero = resultant_condition([1, 1, 1, 1, 1])
        assert value == 0 and zero

    def test_consecutive_pentagon_nonzero(self):
        value, zero = resultant_condition([29, 30, 31, 32, 33])
        assert value != 0 and not zero

    def test_regular_rational_scales_exactly_zero(self):
        for lam in (F(1, 3), F(7, 2), 4):
            value, zero = resultant_condition([lam] * 5)
            assert value == 0 and zero

    def test_scale_law_lambda_63(self):
        sides = [F(3), F(4), F(5), F(4), F(3)]
        lam = F(2)
        base, _ = resultant_condition(sides)
        scaled, _ = resultant_condition([lam * s for s in sides])
        assert scaled == lam**63 * base

    def test_not_tangential_raises(self):
        with pytest.raises(NotTangentialError):
            resultant_condition([10, 1, 1, 1, 1])

    def test_continuity_toward_common_root(self):
        # shrinking perturbations of the regular pentagon shrink |Res|
        mags = []
        for eps in (1e-2, 1e-4, 1e-6):
            value, _ = resultant_condition([1.0 + eps, 1.0, 1.0, 1.0, 1.0])
            mags.append(abs(float(value)))
        assert mags[0] > mags[1] > mags[2]

    def test_float_regular_pentagon_zero(self):
        # dyadic float sides of a regular pentagon still hit exact zero
        value, zero = resultant_condition([2.5] * 5)
        assert value == 0 and zero


class TestConvexCheck:
    def test_unit_pentagon(self):
        check = convex_bicentric_check([1, 1, 1, 1, 1])
        assert check.holds
        assert check.exact_match is True
        assert check.u_value == pytest.approx(47.36067977, rel=1e-8)
        assert check.compared_root == pytest.approx(47.36067977, rel=1e-8)

    def test_scaled_regular(self):
        for lam in (F(1, 2), 3, F(11, 4)):
            assert convex_bicentric_check([lam] * 5).holds

    def test_consecutive_pentagon_false_with_witness(self):
        check = convex_bicentric_check([29, 30, 31, 32, 33])
        assert not check.holds
        # both numbers are reported: 16 A1^2 vs the maximal root
        assert check.u_value == pytest.approx(43487034.2, rel=1e-6)
        assert check.compared_root == pytest.approx(43642506.91, rel=1e-6)
        assert check.relative_gap > 1e-3

    def test_not_tangential_false(self):
        check = convex_bicentric_check([10, 1, 1, 1, 1])
        assert not check.holds
        assert "not tangential" in check.reason


class TestStarCheck:
    def test_unit_pentagram(self):
        check = star_bicentric_check([1, 1, 1, 1, 1])
        assert check.holds
        assert check.exact_match is True
        assert check.u_value == pytest.approx(2.639320225, rel=1e-8)
        assert check.compared_root_index == 0

    def test_scaled_regular(self):
        assert star_bicentric_check([F(5, 3)] * 5).holds

    def test_consecutive_pentagon_false(self):
        check = star_bicentric_check([29, 30, 31, 32, 33])
        assert not check.holds

    def test_near_miss_rational_rejected_exactly(self):
        # tiny rational perturbation: float proximity may look fine at loose
        # tolerance, the exact gcd confirmation must still say no
        sides = [F(1) + F(1, 10**12), F(1), F(1), F(1), F(1)]
        check = star_bicentric_check(sides, tolerance=1e-3)
        assert check.exact_match is False
        assert not check.holds


class TestAnalyze:
    def test_unit_pentagon_report(self):
        report = analyze([1, 1, 1, 1, 1])
        assert report.tangential
        assert report.resultant == 0 and report.resultant_zero
        assert report.convex_bicentric and report.star_bicentric
        assert report.exact_arithmetic

    def test_dominant_side_short_circuits(self):
        report = analyze([10, 1, 1, 1, 1])
        assert not report.tangential
        assert report.violations == (2, 4)
        assert report.resultant is None and report.resultant_zero is None
        assert not report.convex_bicentric and not report.star_bicentric
        assert report.roots is None

    def test_consecutive_pentagon_report(self):
        report = analyze([29, 30, 31, 32, 33])
        assert report.tangential
        assert report.resultant != 0 and not report.resultant_zero
        assert not report.convex_bicentric and not report.star_bicentric

    def test_verdict_implies_resultant_zero(self):
        # type invariant, checked over several scales and arithmetic kinds
        for sides in ([1, 1, 1, 1, 1], [F(7, 3)] * 5, [2.0] * 5, [0.375] * 5):
            report = analyze(sides)
            if report.convex_bicentric or report.star_bicentric:
                assert report.resultant_zero
                assert report.tangential

    def test_float_sides_tolerance_path(self):
        report = analyze([1.0, 1.0, 1.0, 1.0, 1.0])
        assert not report.exact_arithmetic
        assert report.resultant_zero
        assert report.convex_bicentric and report.star_bicentric

    def test_random_tangential_but_not_bicentric(self):
        rng = random.Random(33)
        seen_nonzero = 0
        for _ in range(10):
            sides = rand_tangential_sides(rng)
            report = analyze(sides)
            assert report.tangential
            if not report.resultant_zero:
                seen_nonzero += 1
                assert not report.convex_bicentric and not report.star_bicentric
        assert seen_nonzero >= 9  # bicentricity is codimension one; random hits are rare


class TestResultantAgainstSharedRoots:
    def test_gcd_detects_both_shared_roots(self):
        h = robbins_polynomial([1, 1, 1, 1, 1])
        s = sylvester_area_polynomial(UNIT_T, F(5, 2))
        g = rp.poly_gcd(list(s.coefficients), list(h.coefficients))
        assert rp.degree(g) == 2  # both tangential areas are cyclic areas

    def test_no_shared_root_for_consecutive_pentagon(self):
        h = robbins_polynomial([29, 30, 31, 32, 33])
        t = tangent_lengths(Linkage([29, 30, 31, 32, 33]))
        s = sylvester_area_polynomial(t, F(155, 2))
        g = rp.poly_gcd(list(s.coefficients), list(h.coefficients))
        assert rp.degree(g) == 0

    def test_sixteen_r_star_p_squared_matches_smallest_root(self):
        lk = Linkage([1, 1, 1, 1, 1])
        pair = pentagon_inradii(tangent_lengths(lk))
        p = float(semiperimeter(lk))
        u_star = 16 * (pair.r_star * p) ** 2
        roots = real_roots(robbins_polynomial(lk))
        assert u_star == pytest.approx(roots.values[0], rel=1e-8)
