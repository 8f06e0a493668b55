from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from harmw import (
    FamilySpec,
    analytic_koebe,
    coefficient_bound,
    conjectured_bounds,
    evaluate,
    harmonic_koebe,
    identity_map,
    random_member,
    sharp_single,
    sharp_sum,
    sufficient_condition_sum,
    wh0_margin,
    DiskGrid,
)
from harmw.errors import ParameterError
from harmw.extremal import koebe_rational_coefficients


def binomial_oracle(numerator, n):
    """[z^n] numerator(z) / (1-z)^3 via math.comb, independent of the library."""
    from math import comb

    return sum(c * comb(n - j + 2, 2) for j, c in numerator.items() if j <= n)


class TestHarmonicKoebe:
    def test_low_coefficients(self):
        K = harmonic_koebe(20)
        assert K.h[2] == pytest.approx(5 / 2) and K.g[2] == pytest.approx(1 / 2)
        assert K.h[3] == pytest.approx(14 / 3) and K.g[3] == pytest.approx(5 / 3)
        assert K.h[1] == 1 and K.g[1] == 0

    def test_rational_form(self):
        K = harmonic_koebe(20)
        num_h = {1: Fraction(1), 2: Fraction(-1, 2), 3: Fraction(1, 6)}
        num_g = {2: Fraction(1, 2), 3: Fraction(1, 6)}
        for n in range(2, 21):
            assert K.h[n] == pytest.approx(float(binomial_oracle(num_h, n)), abs=1e-9)
            assert K.g[n] == pytest.approx(float(binomial_oracle(num_g, n)), abs=1e-9)

    def test_library_rational_expansion(self):
        A, B = koebe_rational_coefficients(40)
        for n in range(2, 41):
            assert A[n] == Fraction((2 * n + 1) * (n + 1), 6)
            assert B[n] == Fraction((2 * n - 1) * (n - 1), 6)

    def test_too_short(self):
        with pytest.raises(ParameterError):
            harmonic_koebe(2)


class TestAnalyticKoebe:
    def test_coefficients(self):
        k = analytic_koebe(10)
        assert k[2] == 2 and k[5] == 5

    def test_value_at_half(self):
        k = analytic_koebe(64)
        tail = sum(n * 0.5**n for n in range(65, 400))
        assert abs(evaluate(k, 0.5) - 2.0) <= tail + 1e-15


class TestSharpFamilies:
    def test_sharp_sum_values(self):
        assert sharp_sum(1.0, 10).h[2] == pytest.approx(0.5)
        assert sharp_sum(0.0, 10).h[3] == pytest.approx(2 / 3)

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0])
    def test_sharp_sum_attains_bound(self, alpha):
        f = sharp_sum(alpha, 30)
        for n in range(2, 31):
            assert abs(f.h[n]) + abs(f.g[n]) == pytest.approx(coefficient_bound(alpha, n)[1], rel=1e-15)

    def test_sharp_single_values(self):
        assert sharp_single(1.0, 2).g[2] == pytest.approx(0.25)
        assert sharp_single(0.0, 5).g[5] == pytest.approx(0.2)

    @pytest.mark.parametrize("alpha,n", [(1.0, 2), (1.0, 3), (0.0, 5), (2.0, 4)])
    def test_sharp_single_margin(self, alpha, n):
        rep = wh0_margin(sharp_single(alpha, n), alpha, DiskGrid())
        assert rep.min_value == pytest.approx(1 - 0.999 ** (n - 1), abs=1e-12)

    @given(st.floats(0, 10), st.integers(2, 200))
    def test_sharp_single_matches_bound(self, alpha, n):
        assert abs(sharp_single(alpha, n).g[n]) == pytest.approx(coefficient_bound(alpha, n)[0], rel=1e-15)


class TestRandomMember:
    @given(st.integers(0, 2**32), st.sampled_from([0.0, 0.5, 1.0, 3.0]), st.floats(1e-3, 0.99))
    @settings(max_examples=60)
    def test_sum_is_one_minus_slack(self, seed, alpha, slack):
        f = random_member(alpha, 32, seed, slack)
        assert sufficient_condition_sum(f, alpha) == pytest.approx(1 - slack, abs=1e-12)

    @pytest.mark.parametrize("seed", range(8))
    def test_grid_member(self, seed, grid):
        f = random_member([0.0, 1.0][seed % 2], 64, seed, 0.01)
        assert wh0_margin(f, [0.0, 1.0][seed % 2], grid).min_value > 0

    def test_deterministic(self):
        a, b = random_member(1.0, 64, 7, 0.1), random_member(1.0, 64, 7, 0.1)
        assert np.array_equal(a.h.coeffs, b.h.coeffs) and np.array_equal(a.g.coeffs, b.g.coeffs)
        c = random_member(1.0, 64, 8, 0.1)
        assert not np.array_equal(a.h.coeffs, c.h.coeffs)

    def test_pinned_stream(self):
        # guards the published draw order against silent generator changes
        u = np.random.default_rng(7).random((63, 4))
        f = random_member(1.0, 64, 7, 0.1)
        ratio = f.h[2] / (u[0, 0] / 4 * np.exp(2j * np.pi * u[0, 1]))
        assert f.g[2] / (u[0, 2] / 4 * np.exp(2j * np.pi * u[0, 3])) == pytest.approx(ratio, rel=1e-14)
        assert abs(ratio.imag) < 1e-14

    @pytest.mark.parametrize("slack", [0.0, 1.0, -0.1])
    def test_bad_slack(self, slack):
        with pytest.raises(ParameterError):
            random_member(1.0, 10, 0, slack)


class TestConjecturedBounds:
    def test_values(self):
        assert conjectured_bounds(2) == pytest.approx((5 / 2, 1 / 2))
        assert conjectured_bounds(3) == pytest.approx((14 / 3, 5 / 3))

    @given(st.integers(2, 10_000))
    def test_difference_is_n(self, n):
        A, B = conjectured_bounds(n)
        assert A - B == pytest.approx(n, rel=1e-14)


class TestFamilySpec:
    @pytest.mark.parametrize(
        "d",
        [
            {"name": "identity"},
            {"name": "harmonic_koebe", "order": 10},
            {"name": "analytic_koebe", "order": 10},
            {"name": "sharp_sum", "alpha": 1, "order": 10},
            {"name": "sharp_single", "alpha": 0.5, "n": 4},
            {"name": "random_member", "alpha": 1.0, "order": 10, "seed": 3, "slack": 0.2},
        ],
    )
    def test_round_trip(self, d):
        spec = FamilySpec.from_dict(d)
        again = FamilySpec.from_dict(spec.to_dict())
        assert again == spec
        f = spec.build()
        assert f.h[1] == 1 and f.g[1] == 0

    @pytest.mark.parametrize(
        "d",
        [
            {"name": "nope"},
            {"name": "sharp_sum", "alpha": 1},
            {"name": "identity", "order": 3},
            {"name": "sharp_single", "alpha": 1, "n": 2.5},
            {"name": "sharp_sum", "alpha": "1", "order": 4},
            {"alpha": 1},
            {"name": "identity", "colour": "red"},
        ],
    )
    def test_invalid(self, d):
        with pytest.raises(ParameterError):
            FamilySpec.from_dict(d)

    def test_identity_builds_identity(self):
        assert FamilySpec("identity").build().h[1] == identity_map().h[1]
