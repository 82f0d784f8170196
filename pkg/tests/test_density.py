"""Bandwidth selection and the kernel CDF estimate."""

from __future__ import annotations

import numpy as np
import pytest

import entroscore as es


class TestSelectBandwidth:
    def test_two_point_hand_value(self):
        # 0.9 * min(sqrt(0.5), 0.5/1.34) * 2**(-1/5), worked by hand.
        h = es.select_bandwidth([0.0, 1.0])
        np.testing.assert_allclose(h, 0.29234906976362374, rtol=1e-14)

    def test_matches_formula_on_random_samples(self):
        rng = np.random.default_rng(12)
        for _ in range(25):
            x = rng.uniform(size=rng.integers(5, 400))
            std = float(np.std(x, ddof=1))
            iqr = float(np.percentile(x, 75) - np.percentile(x, 25))
            expected = 0.9 * min(std, iqr / 1.34) * x.size ** (-0.2)
            np.testing.assert_allclose(es.select_bandwidth(x), expected, rtol=1e-12)

    def test_falls_back_when_iqr_is_zero(self):
        # Heavy ties collapse the quartile spread but not the deviation.
        x = np.array([0.0] * 8 + [1.0])
        std = float(np.std(x, ddof=1))
        np.testing.assert_allclose(
            es.select_bandwidth(x), 0.9 * std * x.size ** (-0.2), rtol=1e-14
        )

    def test_constant_samples_rejected(self):
        with pytest.raises(es.AllSamplesEqualError):
            es.select_bandwidth([0.4] * 10)

    def test_order_invariant_to_the_bit(self):
        rng = np.random.default_rng(13)
        x = rng.uniform(size=101)
        shuffled = x[rng.permutation(x.size)]
        assert es.select_bandwidth(x) == es.select_bandwidth(shuffled)

    def test_shrinks_with_sample_count(self):
        rng = np.random.default_rng(14)
        small = rng.uniform(size=50)
        big = np.concatenate([small, rng.uniform(size=1950)])
        assert es.select_bandwidth(big) < es.select_bandwidth(small)

    @pytest.mark.parametrize("bad", [[0.5], [[0.1, 0.2]], [0.1, np.nan]])
    def test_invalid_inputs(self, bad):
        with pytest.raises(es.InvariantError):
            es.select_bandwidth(bad)


class TestCdfEstimate:
    def test_monotone_and_bounded(self):
        rng = np.random.default_rng(15)
        x = rng.uniform(size=80)
        cdf = es.estimate_cdf(x, es.select_bandwidth(x))
        grid = np.linspace(0.0, 1.0, 501)
        phi = cdf(grid)
        assert np.all(np.diff(phi) >= 0.0)
        assert phi[0] >= 0.0 and phi[-1] <= 1.0

    def test_endpoints_pinned_with_correction(self):
        rng = np.random.default_rng(16)
        x = rng.uniform(0.1, 0.9, size=40)
        cdf = es.estimate_cdf(x, es.select_bandwidth(x))
        assert cdf(0.0) == 0.0
        assert cdf(1.0) == 1.0

    def test_uncorrected_endpoints_leak_mass(self):
        cdf = es.estimate_cdf([0.25, 0.75], 0.1, boundary_correction=False)
        assert 0.0 < cdf(0.0) < 0.05
        assert 0.95 < cdf(1.0) < 1.0

    def test_symmetric_samples_cross_half(self):
        cdf = es.estimate_cdf([0.25, 0.75], es.select_bandwidth([0.25, 0.75]))
        np.testing.assert_allclose(cdf(0.5), 0.5, atol=1e-15)

    def test_scalar_and_array_calls_agree(self):
        rng = np.random.default_rng(17)
        x = rng.uniform(size=30)
        cdf = es.estimate_cdf(x, 0.1)
        pts = np.array([0.0, 0.3, 0.7, 1.0])
        vec = cdf(pts)
        assert isinstance(cdf(0.3), float)
        np.testing.assert_array_equal(vec, [cdf(p) for p in pts])

    def test_preserves_input_shape(self):
        rng = np.random.default_rng(18)
        x = rng.uniform(size=20)
        cdf = es.estimate_cdf(x, 0.1)
        out = cdf(np.full((3, 4), 0.5))
        assert out.shape == (3, 4)

    def test_sample_order_never_matters(self):
        rng = np.random.default_rng(19)
        x = rng.uniform(size=64)
        grid = np.linspace(0.0, 1.0, 257)
        base = es.estimate_cdf(x, 0.08)(grid)
        for _ in range(5):
            shuffled = x[rng.permutation(x.size)]
            assert np.array_equal(es.estimate_cdf(shuffled, 0.08)(grid), base)

    def test_reflection_symmetry(self):
        # Mirroring the samples mirrors the estimate: the kernel is even,
        # so only rounding noise from the kernel evaluations remains.
        rng = np.random.default_rng(20)
        x = rng.uniform(size=50)
        grid = np.linspace(0.0, 1.0, 201)
        f = es.estimate_cdf(x, es.select_bandwidth(x))
        g = es.estimate_cdf(1.0 - x, es.select_bandwidth(1.0 - x))
        np.testing.assert_allclose(g(grid), 1.0 - f(1.0 - grid), atol=1e-13)

    def test_blocked_evaluation_matches_direct(self):
        # A grid large enough to force several evaluation blocks.
        rng = np.random.default_rng(21)
        x = rng.uniform(size=500)
        cdf = es.estimate_cdf(x, 0.05)
        grid = np.linspace(0.0, 1.0, 20001)
        whole = cdf(grid)
        np.testing.assert_array_equal(whole[:101], cdf(grid[:101]))

    def test_properties(self):
        x = [0.5, 0.1, 0.9]
        cdf = es.estimate_cdf(x, 0.2, boundary_correction=False)
        assert cdf.bandwidth == 0.2
        assert cdf.boundary_correction is False
        np.testing.assert_array_equal(cdf.support_samples, [0.1, 0.5, 0.9])
        assert not cdf.support_samples.flags.writeable


class TestCdfErrors:
    @pytest.mark.parametrize("h", [0.0, -0.5, np.inf, np.nan])
    def test_bad_bandwidth(self, h):
        with pytest.raises(es.InvalidBandwidthError):
            es.estimate_cdf([0.2, 0.8], h)

    def test_bandwidth_flattening_the_estimate(self):
        # So wide that the kernel CDF cannot tell 0 from 1 in float64.
        with pytest.raises(es.InvalidBandwidthError, match="flat"):
            es.estimate_cdf([0.2, 0.8], 1e20)

    def test_samples_outside_unit_interval(self):
        with pytest.raises(es.InvariantError):
            es.estimate_cdf([-0.1, 0.5], 0.1)
        with pytest.raises(es.InvariantError):
            es.estimate_cdf([0.5, 1.2], 0.1)

    def test_too_few_or_non_finite_samples(self):
        with pytest.raises(es.InvariantError):
            es.estimate_cdf([0.5], 0.1)
        with pytest.raises(es.InvariantError):
            es.estimate_cdf([0.5, np.nan], 0.1)


class TestFidelity:
    """Against uniform data the estimate should track phi(x) = x."""

    def test_sup_distance_shrinks_with_n(self):
        rng = np.random.default_rng(42)
        grid = np.linspace(0.0, 1.0, 1001)
        sups = []
        for n in (100, 1000):
            x = rng.uniform(size=n)
            cdf = es.estimate_cdf(x, es.select_bandwidth(x))
            sups.append(np.max(np.abs(cdf(grid) - grid)))
        assert sups[1] < sups[0]
        assert sups[1] <= 0.05

    def test_interior_quantiles_close(self):
        rng = np.random.default_rng(43)
        x = rng.uniform(size=2000)
        cdf = es.estimate_cdf(x, es.select_bandwidth(x))
        for q in (0.1, 0.25, 0.5, 0.75, 0.9):
            assert abs(cdf(q) - q) < 0.03
