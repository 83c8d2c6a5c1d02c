"""Single-user optimal duty cycle and its closed-form properties."""

import math

import numpy as np
import pytest

from icburst import (
    BurstPoint,
    UserBudget,
    asymptotic_fraction,
    burst_rate,
    capacity,
    interference_free_rate,
    optimal_burstiness,
)


class TestUserBudget:
    def test_validation(self):
        with pytest.raises(ValueError):
            UserBudget(0.0, 0.0)
        with pytest.raises(ValueError):
            UserBudget(2.0, -0.1)
        with pytest.raises(ValueError):
            UserBudget(2.0, 2.5)

    def test_eps_equal_power_allowed(self):
        UserBudget(2.0, 2.0)


class TestOptimalBurstiness:
    def test_frozen_anchor(self):
        bp = optimal_burstiness(3.5, 2.0)
        assert bp.theta_star == pytest.approx(0.7623409700193002, abs=1e-12)
        assert bp.nu_star == pytest.approx(2.591121476668623, abs=1e-12)

    def test_more_power_longer_bursts(self):
        assert optimal_burstiness(4.0, 2.0).theta_star == pytest.approx(
            0.8712468228792003, abs=1e-12
        )
        assert optimal_burstiness(3.0, 2.0).theta_star == pytest.approx(
            0.6534351171594003, abs=1e-12
        )

    def test_budget_and_pair_forms_agree(self):
        assert optimal_burstiness(UserBudget(3.5, 2.0)) == optimal_burstiness(3.5, 2.0)
        with pytest.raises(TypeError):
            optimal_burstiness(UserBudget(3.5, 2.0), 2.0)

    def test_zero_cost_stays_on(self):
        bp = optimal_burstiness(3.5, 0.0)
        assert bp.theta_star == 1.0
        assert bp.nu_star == 3.5

    def test_unit_cost_limit(self):
        # the closed form degenerates at eps = 1; the limit is P/e
        assert optimal_burstiness(2.0, 1.0).theta_star == pytest.approx(
            2.0 / math.e, abs=1e-9
        )
        assert optimal_burstiness(3.0, 1.0).theta_star == 1.0

    def test_power_accounting_on_random_budgets(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            p = rng.uniform(0.2, 8.0)
            eps = rng.uniform(0.0, p)
            bp = optimal_burstiness(p, eps)
            assert 0.0 < bp.theta_star <= 1.0
            assert bp.theta_star * (bp.nu_star + eps) == pytest.approx(p, abs=1e-9)

    def test_signal_power_independent_of_budget_when_bursty(self):
        # with theta* < 1 the on-power depends only on eps
        nu_a = optimal_burstiness(3.5, 2.0).nu_star
        nu_b = optimal_burstiness(3.0, 2.0).nu_star
        nu_c = optimal_burstiness(2.5, 2.0).nu_star
        assert nu_a == pytest.approx(nu_b, abs=1e-12)
        assert nu_a == pytest.approx(nu_c, abs=1e-12)

    def test_optimality_against_fraction_scan(self):
        for p, eps in ((3.5, 2.0), (1.0, 0.5), (6.0, 1.5)):
            best = burst_rate(optimal_burstiness(p, eps).theta_star, p, eps)
            for theta in np.linspace(eps / p + 1e-6, 1.0, 400):
                assert best >= burst_rate(float(theta), p, eps) - 1e-10

    def test_unpacks_as_pair(self):
        theta, nu = optimal_burstiness(3.5, 2.0)
        assert (theta, nu) == (0.7623409700193002, 2.591121476668623)
        assert isinstance(optimal_burstiness(3.5, 2.0), BurstPoint)


class TestInterferenceFreeRate:
    def test_consistent_with_burst_point(self):
        budget = UserBudget(3.5, 2.0)
        bp = optimal_burstiness(budget)
        expected = bp.theta_star * capacity(bp.nu_star)
        assert interference_free_rate(budget) == pytest.approx(expected, abs=1e-12)

    def test_frozen_value(self):
        assert interference_free_rate(UserBudget(3.5, 2.0)) == pytest.approx(
            0.7030439760834243, abs=1e-9
        )

    def test_zero_cost_is_plain_capacity(self):
        assert interference_free_rate(UserBudget(3.5, 0.0)) == pytest.approx(
            capacity(3.5), abs=1e-15
        )


class TestAsymptoticFraction:
    def test_caps_at_one(self):
        assert asymptotic_fraction(0.4) == 0.4
        assert asymptotic_fraction(1.7) == 1.0
        assert asymptotic_fraction(math.inf) == 1.0

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            asymptotic_fraction(0.0)

    def test_approximates_exact_fraction_at_small_cost(self):
        p = 0.8
        for eps in (1e-3, 1e-4, 1e-5):
            lam = p / math.sqrt(2.0 * eps)
            if lam >= 1.0:
                continue
            exact = optimal_burstiness(p, eps).theta_star
            assert asymptotic_fraction(lam) == pytest.approx(exact, rel=0.05)
