"""Superposition-coding sum rate of the two-user channel at fixed powers."""

import numpy as np
import pytest

from icburst import (
    GridSpec,
    PowerSplit,
    TwoUserChannel,
    capacity,
    hk_psi,
    hk_sum_rate,
    hk_sum_rate_fixed_split,
    noisy_interference_test,
)


def closed_form_strong(p1, p2, a, b):
    """All-common sum rate: the four brackets at full common power."""
    return min(
        capacity(p1) + capacity(p2),
        capacity(p1 + a * p2),
        capacity(p2 + b * p1),
        capacity(a * p2) + capacity(b * p1),
    )


def tin_value(p1, p2, a, b):
    return capacity(p1 / (1 + a * p2)) + capacity(p2 / (1 + b * p1))


class TestPowerSplit:
    def test_validation(self):
        with pytest.raises(ValueError):
            PowerSplit(-0.1, 0.5)
        with pytest.raises(ValueError):
            PowerSplit(0.5, 1.1)

    def test_unpacks(self):
        t1, t2 = PowerSplit(0.25, 0.75)
        assert (t1, t2) == (0.25, 0.75)


class TestTwoUserChannel:
    def test_validation(self):
        with pytest.raises(ValueError):
            TwoUserChannel(-0.1, 3.0, 3.5, 3.5, 2.0, 2.0)
        with pytest.raises(ValueError):
            TwoUserChannel(3.0, 3.0, 3.5, 3.5, 4.0, 2.0)

    def test_budget_views(self):
        ch = TwoUserChannel(3.0, 3.0, 3.5, 3.0, 2.0, 1.5)
        assert (ch.budget1.power, ch.budget1.eps) == (3.5, 2.0)
        assert (ch.budget2.power, ch.budget2.eps) == (3.0, 1.5)


class TestPsiBrackets:
    def test_frozen_tuple_at_full_common(self):
        psi = hk_psi(1.5, 1.5, 3.0, 3.0, PowerSplit(1.0, 1.0))
        assert psi == pytest.approx(
            (
                1.3219280948873624,
                1.403677461028802,
                1.403677461028802,
                2.4594316186372973,
            ),
            abs=1e-12,
        )

    def test_all_brackets_coincide_at_zero_common(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            p1, p2 = rng.uniform(0.5, 6.0, 2)
            a, b = rng.uniform(0.05, 4.0, 2)
            psi = hk_psi(p1, p2, a, b, PowerSplit(0.0, 0.0))
            tin = tin_value(p1, p2, a, b)
            assert psi == pytest.approx((tin, tin, tin, tin), abs=1e-12)

    def test_fixed_split_takes_minimum(self):
        split = PowerSplit(0.6, 0.3)
        psi = hk_psi(2.0, 1.0, 1.5, 0.8, split)
        assert hk_sum_rate_fixed_split(2.0, 1.0, 1.5, 0.8, split) == min(psi)


class TestNoisyInterferenceTest:
    def test_weak_channel_passes(self):
        assert noisy_interference_test(1.5, 1.5, 0.05, 0.05)

    def test_strong_channel_fails(self):
        assert not noisy_interference_test(1.5, 1.5, 3.0, 3.0)

    def test_one_sided_weak(self):
        # sqrt(a)*(b*p1+1) = sqrt(0.25) = 0.5 <= 1 with b = 0
        assert noisy_interference_test(1.5, 1.5, 0.25, 0.0)


class TestHkSumRate:
    def test_frozen_strong_point(self):
        rate, split = hk_sum_rate(1.5, 1.5, 3.0, 3.0)
        assert rate == pytest.approx(1.3219280948873624, abs=1e-12)
        assert (split.tau1, split.tau2) == (1.0, 1.0)

    def test_strong_shortcut_matches_closed_form(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            p1, p2 = rng.uniform(0.5, 6.0, 2)
            a, b = rng.uniform(1.0, 5.0, 2)
            rate, split = hk_sum_rate(p1, p2, a, b)
            assert rate == pytest.approx(closed_form_strong(p1, p2, a, b), abs=1e-12)
            assert (split.tau1, split.tau2) == (1.0, 1.0)

    def test_noisy_shortcut_treats_interference_as_noise(self):
        rng = np.random.default_rng(29)
        hits = 0
        while hits < 15:
            p1, p2 = rng.uniform(0.5, 4.0, 2)
            a, b = rng.uniform(0.0, 0.08, 2)
            if not noisy_interference_test(p1, p2, a, b):
                continue
            hits += 1
            rate, split = hk_sum_rate(p1, p2, a, b)
            assert rate == pytest.approx(tin_value(p1, p2, a, b), abs=1e-12)
            assert (split.tau1, split.tau2) == (0.0, 0.0)

    def test_grid_regime_beats_both_corners(self):
        # a >= 1 > b puts the split search in play; the grid contains
        # both the all-common and no-common corners, so it can only win
        p1, p2, a, b = 2.5, 1.8, 1.4, 0.35
        rate, _ = hk_sum_rate(p1, p2, a, b)
        corner_full = min(hk_psi(p1, p2, a, b, PowerSplit(1.0, 1.0)))
        corner_zero = min(hk_psi(p1, p2, a, b, PowerSplit(0.0, 0.0)))
        assert rate >= max(corner_full, corner_zero) - 1e-12

    def test_symmetry_under_user_swap(self):
        rate_ab, _ = hk_sum_rate(2.0, 3.0, 1.7, 0.6)
        rate_ba, _ = hk_sum_rate(3.0, 2.0, 0.6, 1.7)
        assert rate_ab == pytest.approx(rate_ba, abs=1e-12)

    def test_tiny_negative_power_clamped(self):
        rate, _ = hk_sum_rate(-1e-13, 1.5, 3.0, 3.0)
        assert rate == pytest.approx(capacity(1.5), abs=1e-9)

    def test_meaningful_negative_power_rejected(self):
        with pytest.raises(ValueError):
            hk_sum_rate(-1e-6, 1.5, 3.0, 3.0)

    def test_custom_grid_accepted(self):
        grid = GridSpec((0.0, 0.0), (1.0, 1.0), resolution=0.05, refinements=1)
        rate, _ = hk_sum_rate(2.5, 1.8, 1.4, 0.35, grid=grid)
        coarse = min(hk_psi(2.5, 1.8, 1.4, 0.35, PowerSplit(1.0, 1.0)))
        assert rate >= coarse - 1e-12
