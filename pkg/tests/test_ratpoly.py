import random
from fractions import Fraction

import pytest

from pentalink import ratpoly as rp

F = Fraction


def rand_poly(rng, deg, span=20):
    coeffs = [F(rng.randint(-span, span), rng.randint(1, 5)) for _ in range(deg + 1)]
    if coeffs[0] == 0:
        coeffs[0] = F(1)
    return rp.normalize(coeffs)


class TestArithmetic:
    def test_normalize_strips(self):
        assert rp.normalize([0, 0, 1, 2]) == [F(1), F(2)]
        assert rp.normalize([0, 0]) == []

    def test_add_sub_roundtrip(self):
        rng = random.Random(1)
        for _ in range(50):
            f = rand_poly(rng, rng.randint(0, 6))
            g = rand_poly(rng, rng.randint(0, 6))
            assert rp.sub(rp.add(f, g), g) == f

    def test_mul_degree_and_eval(self):
        rng = random.Random(2)
        for _ in range(50):
            f = rand_poly(rng, rng.randint(1, 5))
            g = rand_poly(rng, rng.randint(1, 5))
            h = rp.mul(f, g)
            assert rp.degree(h) == rp.degree(f) + rp.degree(g)
            x = F(rng.randint(-9, 9), rng.randint(1, 7))
            assert rp.eval_at(h, x) == rp.eval_at(f, x) * rp.eval_at(g, x)

    def test_div_rem_identity(self):
        rng = random.Random(3)
        for _ in range(50):
            f = rand_poly(rng, rng.randint(0, 8))
            g = rand_poly(rng, rng.randint(0, 4))
            q, r = rp.div_rem(f, g)
            assert rp.add(rp.mul(q, g), r) == f
            assert rp.degree(r) < rp.degree(g) or r == []

    def test_derivative(self):
        # d/dx (2x^3 - x + 5) = 6x^2 - 1
        assert rp.derivative([F(2), F(0), F(-1), F(5)]) == [F(6), F(0), F(-1)]


class TestGcdAndSquarefree:
    def test_gcd_of_built_product(self):
        rng = random.Random(4)
        for _ in range(20):
            common = rand_poly(rng, 2)
            f = rp.mul(common, rand_poly(rng, 2))
            g = rp.mul(common, rand_poly(rng, 1))
            got = rp.poly_gcd(f, g)
            # gcd must be divisible by the planted common factor
            _, rem = rp.div_rem(got, rp.monic(common))
            assert rp.degree(got) >= rp.degree(common)
            if rp.degree(got) == rp.degree(common):
                assert rem == []

    def test_yun_reassembles(self):
        rng = random.Random(5)
        for _ in range(20):
            a1 = rand_poly(rng, 1)
            a2 = rand_poly(rng, 1)
            f = rp.mul(a1, rp.mul(a2, a2))
            parts = rp.squarefree_decomposition(f)
            rebuilt = [F(1)]
            for factor, mult in parts:
                for _ in range(mult):
                    rebuilt = rp.mul(rebuilt, factor)
            assert rp.monic(rebuilt) == rp.monic(f)

    def test_yun_quintuple(self):
        f = [F(1)]
        for _ in range(5):
            f = rp.mul(f, [F(1), F(-3)])
        f = rp.mul(f, [F(1), F(-50), F(125)])
        parts = dict()
        for factor, mult in rp.squarefree_decomposition(f):
            parts[mult] = factor
        assert parts[5] == [F(1), F(-3)]
        assert parts[1] == [F(1), F(-50), F(125)]


class TestSturmAndRoots:
    def test_count_simple(self):
        f = [F(1), F(0), F(-1)]  # x^2 - 1
        chain = rp.sturm_chain(f)
        assert rp.count_roots(chain, F(0), rp.POS_INF) == 1
        assert rp.count_roots(chain, rp.NEG_INF, rp.POS_INF) == 2

    def test_known_roots_found(self):
        # (x+2) x (x-5)
        f = rp.mul(rp.mul([F(1), F(2)], [F(1), F(0)]), [F(1), F(-5)])
        roots = rp.real_roots(f)
        assert [r.multiplicity for r in roots] == [1, 1, 1]
        assert roots[0].value == pytest.approx(-2.0, rel=1e-11)
        assert roots[1].value == pytest.approx(0.0, abs=1e-11)
        assert roots[2].value == pytest.approx(5.0, rel=1e-11)

    def test_domain_restriction(self):
        f = [F(1), F(0), F(-1)]
        assert [r.value for r in rp.real_roots(f, lo=0)] == [pytest.approx(1.0)]

    def test_exact_rational_root_collapses_interval(self):
        f = rp.mul([F(1), F(-3)], [F(3), F(-1)])  # roots 3 and 1/3
        roots = rp.real_roots(f, lo=0)
        exact = [r for r in roots if r.lo == r.hi]
        # bisection midpoints are dyadic so 3 is hit exactly somewhere
        assert any(r.lo == 3 for r in exact) or all(
            r.hi - r.lo <= F(1, 10**10) for r in roots
        )

    def test_residuals_and_enclosures(self):
        rng = random.Random(6)
        for _ in range(20):
            roots_planted = sorted(rng.sample(range(-20, 20), 3))
            f = [F(1)]
            for v in roots_planted:
                f = rp.mul(f, [F(1), F(-v)])
            found = rp.real_roots(f)
            assert [round(r.value) for r in found] == roots_planted
            for r in found:
                assert r.lo <= F(r.value).limit_denominator(10**15) <= r.hi or r.lo == r.hi

    def test_clustered_roots_separated(self):
        # roots at 1 and 1 + 1e-6
        f = rp.mul([F(1), F(-1)], [F(1), F(-1) - F(1, 10**6)])
        roots = rp.real_roots(f)
        assert len(roots) == 2
        assert roots[0].value == pytest.approx(1.0, rel=1e-9)
        assert roots[1].value == pytest.approx(1.0 + 1e-6, rel=1e-9)

    def test_multiplicity_from_decomposition(self):
        f = rp.mul(rp.mul([F(1), F(-2)], [F(1), F(-2)]), [F(1), F(1)])
        roots = rp.real_roots(f)
        by_value = {round(r.value): r.multiplicity for r in roots}
        assert by_value == {-1: 1, 2: 2}

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            rp.real_roots([])


class TestResultant:
    def test_product_formula_small(self):
        # Res(f, g) = lc(f)^deg(g) * prod g(root_i) over roots of f
        f = [F(1), F(0), F(-1)]  # roots 1, -1
        g = [F(1), F(-2)]
        assert rp.resultant(f, g) == (1 - 2) * (-1 - 2) * 1  # g(1)*g(-1)

    def test_common_root_gives_zero(self):
        f = rp.mul([F(1), F(-4)], [F(1), F(7)])
        g = rp.mul([F(1), F(-4)], [F(2), F(3)])
        assert rp.resultant(f, g) == 0

    def test_multiplicativity(self):
        rng = random.Random(8)
        for _ in range(10):
            f = rand_poly(rng, 2)
            g = rand_poly(rng, 2)
            h = rand_poly(rng, 1)
            assert rp.resultant(rp.mul(f, g), h) == rp.resultant(f, h) * rp.resultant(g, h)

    def test_matches_fraction_gauss_determinant(self):
        rng = random.Random(9)
        for _ in range(10):
            f = rand_poly(rng, 3)
            g = rand_poly(rng, 2)
            m = rp.sylvester_matrix(f, g)
            assert len(m) == 5 and all(len(row) == 5 for row in m)
            det = _gauss_det([row[:] for row in m])
            assert rp.resultant(f, g) == det

    def test_constant_cases(self):
        assert rp.resultant([F(3)], [F(1), F(2), F(5)]) == 9
        assert rp.resultant([F(1), F(2), F(5)], [F(3)]) == 9


class TestBareiss:
    def test_against_fraction_gauss(self):
        rng = random.Random(10)
        for n in (1, 2, 3, 5, 7):
            for _ in range(5):
                m = [[rng.randint(-30, 30) for _ in range(n)] for _ in range(n)]
                expected = _gauss_det([[F(v) for v in row] for row in m])
                assert rp.bareiss_determinant(m) == expected

    def test_singular(self):
        m = [[1, 2], [2, 4]]
        assert rp.bareiss_determinant(m) == 0

    def test_pivot_swap(self):
        m = [[0, 1], [1, 0]]
        assert rp.bareiss_determinant(m) == -1


def _gauss_det(m):
    n = len(m)
    det = F(1)
    for k in range(n):
        pivot = None
        for r in range(k, n):
            if m[r][k] != 0:
                pivot = r
                break
        if pivot is None:
            return F(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, n):
            if m[r][k] != 0:
                factor = m[r][k] / m[k][k]
                for c in range(k, n):
                    m[r][c] -= factor * m[k][c]
    return det
