"""Burst scheduling schemes of the two-user channel and their orderings."""

import numpy as np
import pytest

from icburst import (
    BurstProfile2,
    GridSpec,
    RegimeError,
    TwoUserChannel,
    burst_rate,
    noisy_interference_test,
    normalized_sum_rate,
    optimal_burstiness,
    scheme_i,
    scheme_ii_tdm,
    scheme_iii,
    scheme_iii_profile,
    scheme_iv,
    scheme_iv_profile,
    upper_bound_two_user,
)

SYMMETRIC = TwoUserChannel(3.0, 3.0, 3.5, 3.5, 2.0, 2.0)


def burst_sum(ch, theta1, theta2):
    return burst_rate(theta1, ch.p1, ch.eps1) + burst_rate(theta2, ch.p2, ch.eps2)


def random_strong_channel(rng):
    p1, p2 = rng.uniform(2.0, 6.0, 2)
    eps1 = rng.uniform(0.2, 0.55) * p1
    eps2 = rng.uniform(0.2, 0.55) * p2
    a, b = rng.uniform(1.0, 4.0, 2)
    return TwoUserChannel(a, b, p1, p2, eps1, eps2)


def is_degenerate(ch):
    t1 = optimal_burstiness(ch.budget1).theta_star
    t2 = optimal_burstiness(ch.budget2).theta_star
    return t1 + t2 <= 1.02


class TestUpperBound:
    def test_frozen_symmetric_value(self):
        assert upper_bound_two_user(SYMMETRIC) == pytest.approx(
            1.4060879521668486, abs=1e-12
        )

    def test_sum_of_solo_rates(self):
        ch = TwoUserChannel(0.7, 1.3, 4.0, 2.5, 1.0, 0.8)
        from icburst import interference_free_rate

        expected = interference_free_rate(ch.budget1) + interference_free_rate(
            ch.budget2
        )
        assert upper_bound_two_user(ch) == pytest.approx(expected, abs=1e-15)


class TestSchemeI:
    def test_frozen_value(self):
        res = scheme_i(SYMMETRIC)
        assert res.rate == pytest.approx(1.3219280948873624, abs=1e-12)
        assert res.profile == (1.0, 1.0)
        assert tuple(res.extra["split"]) == (1.0, 1.0)

    def test_uses_cost_reduced_powers(self):
        from icburst import hk_sum_rate

        ch = TwoUserChannel(1.5, 2.0, 4.0, 3.0, 1.0, 0.5)
        rate, _ = hk_sum_rate(3.0, 2.5, 1.5, 2.0)
        assert scheme_i(ch).rate == pytest.approx(rate, abs=1e-12)


class TestSchemeIITdm:
    def test_frozen_value_and_balanced_split(self):
        res = scheme_ii_tdm(SYMMETRIC)
        assert res.rate == pytest.approx(1.2924812503603982, abs=1e-9)
        assert res.profile[0] == pytest.approx(0.5, abs=5e-3)
        assert res.profile[0] + res.profile[1] == pytest.approx(1.0, abs=1e-12)

    def test_beats_every_feasible_split(self):
        res = scheme_ii_tdm(SYMMETRIC)
        for theta1 in np.linspace(0.24, 0.76, 200):
            theta2 = min(1.0 - theta1, 0.7623409700193002)
            assert res.rate >= burst_sum(SYMMETRIC, float(theta1), theta2) - 1e-6

    def test_degenerate_budgets_reach_upper_bound(self):
        # solo bursts short enough to pack disjointly: TDM is unbeatable
        ch = TwoUserChannel(3.0, 3.0, 0.5, 0.5, 0.45, 0.45)
        res = scheme_ii_tdm(ch)
        assert res.rate == pytest.approx(upper_bound_two_user(ch), abs=1e-12)
        assert res.profile[0] + res.profile[1] < 1.0

    def test_interference_never_enters(self):
        strong = TwoUserChannel(5.0, 5.0, 3.5, 3.5, 2.0, 2.0)
        weak = TwoUserChannel(0.1, 0.2, 3.5, 3.5, 2.0, 2.0)
        assert scheme_ii_tdm(strong).rate == pytest.approx(
            scheme_ii_tdm(weak).rate, abs=1e-15
        )


class TestSchemeIII:
    def test_full_overlap_profile_is_continuous_transmission(self):
        assert scheme_iii_profile(SYMMETRIC, 1.0, 1.0) == pytest.approx(
            scheme_i(SYMMETRIC).rate, abs=1e-12
        )

    def test_zero_overlap_profile_is_time_division(self):
        for theta1 in (0.45, 0.5, 0.62):
            expected = burst_sum(SYMMETRIC, theta1, 1.0 - theta1)
            assert scheme_iii_profile(SYMMETRIC, theta1, 1.0 - theta1) == pytest.approx(
                expected, abs=1e-12
            )

    def test_gapped_profile_rejected(self):
        with pytest.raises(ValueError):
            scheme_iii_profile(SYMMETRIC, 0.4, 0.4)

    def test_frozen_optimum(self):
        res = scheme_iii(SYMMETRIC)
        assert res.rate == pytest.approx(1.3868407288439246, abs=1e-9)
        assert res.profile[0] == pytest.approx(res.profile[1], abs=1e-9)
        assert res.profile[0] == pytest.approx(0.87499, abs=1e-4)

    def test_zero_cost_prefers_full_overlap(self):
        ch = TwoUserChannel(3.0, 3.0, 3.5, 3.5, 0.0, 0.0)
        res = scheme_iii(ch)
        assert res.profile == (1.0, 1.0)
        assert res.rate == pytest.approx(scheme_i(ch).rate, abs=1e-12)

    def test_matches_finer_grid(self):
        rng = np.random.default_rng(41)
        for _ in range(3):
            ch = random_strong_channel(rng)
            if is_degenerate(ch):
                continue
            coarse = scheme_iii(ch).rate
            lo1 = max(0.0, 1.0 - optimal_burstiness(ch.budget2).theta_star)
            lo2 = max(0.0, 1.0 - optimal_burstiness(ch.budget1).theta_star)
            fine = scheme_iii(
                ch,
                grid=GridSpec((lo1, lo2), (1.0, 1.0), resolution=0.005, refinements=2),
            ).rate
            assert abs(fine - coarse) <= 2e-3


class TestSchemeIV:
    def test_frozen_optimum(self):
        res = scheme_iv(SYMMETRIC)
        assert res.rate == pytest.approx(1.406087948857199, abs=1e-9)
        assert res.profile[0] == pytest.approx(0.76234, abs=1e-3)

    def test_meets_upper_bound_on_symmetric_channel(self):
        res = scheme_iv(SYMMETRIC)
        ub = upper_bound_two_user(SYMMETRIC)
        assert ub - res.rate <= 1e-6

    def test_zero_overlap_profile_is_time_division(self):
        for theta1 in (0.4, 0.55):
            expected = burst_sum(SYMMETRIC, theta1, 1.0 - theta1)
            assert scheme_iv_profile(SYMMETRIC, theta1, 1.0 - theta1) == pytest.approx(
                expected, abs=1e-12
            )

    def test_needs_strong_interference(self):
        with pytest.raises(RegimeError):
            scheme_iv(TwoUserChannel(0.5, 3.0, 3.5, 3.5, 2.0, 2.0))
        with pytest.raises(RegimeError):
            scheme_iv_profile(TwoUserChannel(3.0, 0.9, 3.5, 3.5, 2.0, 2.0), 0.8, 0.8)


class TestDominance:
    def test_chains_on_random_strong_channels(self):
        rng = np.random.default_rng(97)
        checked = 0
        while checked < 30:
            ch = random_strong_channel(rng)
            if is_degenerate(ch):
                continue
            checked += 1
            ub = upper_bound_two_user(ch)
            r1 = scheme_i(ch).rate
            r2 = scheme_ii_tdm(ch).rate
            r3 = scheme_iii(ch).rate
            r4 = scheme_iv(ch).rate
            assert r3 >= r1 - 1e-9
            assert r3 >= r2 - 2e-3
            assert r4 >= r2 - 2e-3
            for r in (r1, r2, r3, r4):
                assert r <= ub + 1e-9

    def test_chains_on_noisy_weak_channels(self):
        rng = np.random.default_rng(101)
        checked = 0
        while checked < 10:
            p1, p2 = rng.uniform(2.0, 6.0, 2)
            eps1 = rng.uniform(0.2, 0.55) * p1
            eps2 = rng.uniform(0.2, 0.55) * p2
            a, b = rng.uniform(0.0, 0.1, 2)
            ch = TwoUserChannel(a, b, p1, p2, eps1, eps2)
            if is_degenerate(ch):
                continue
            nu1 = optimal_burstiness(ch.budget1).nu_star
            nu2 = optimal_burstiness(ch.budget2).nu_star
            if not noisy_interference_test(nu1, nu2, a, b):
                continue
            checked += 1
            ub = upper_bound_two_user(ch)
            r1 = scheme_i(ch).rate
            r2 = scheme_ii_tdm(ch).rate
            r3 = scheme_iii(ch).rate
            assert r3 >= r1 - 1e-9
            assert r3 >= r2 - 2e-3
            assert max(r1, r2, r3) <= ub + 1e-9


class TestNormalizedSumRate:
    def test_plain_ratio(self):
        assert normalized_sum_rate(0.7, 1.4) == pytest.approx(0.5, abs=1e-15)

    def test_clipped_to_unit_interval(self):
        assert normalized_sum_rate(1.5, 1.4) == 1.0
        assert normalized_sum_rate(-0.1, 1.4) == 0.0

    def test_nonpositive_bound_rejected(self):
        with pytest.raises(ValueError):
            normalized_sum_rate(0.5, 0.0)


class TestBurstProfile2:
    def test_validation(self):
        with pytest.raises(ValueError):
            BurstProfile2(-0.1, 0.5)
        with pytest.raises(ValueError):
            BurstProfile2(0.5, 1.2)
