"""Optimal burstiness of a single user under a processing energy cost.

A transmitter with average power budget P pays a fixed cost eps per
channel use whenever it is on.  Bursting over a fraction theta of the
time leaves signal power nu = P/theta - eps, so the achievable rate is
theta * C(P/theta - eps).  The maximizing fraction has a closed form in
the Lambert W function:

    theta* = min(1, P*W(exp(-1)*(eps-1)) / ((eps-1)*(W(exp(-1)*(eps-1)) + 1)))

with the eps -> 1 limit theta* = min(1, P/e).  For eps = 0 staying on
all the time is optimal.  In the small-cost regime theta* behaves like
min(1, lambda) with lambda = P/sqrt(2*eps).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import burst_rate, lambert_w0

_E = math.e


@dataclass(frozen=True)
class UserBudget:
    """Average power budget and per-use processing cost of one user."""

    power: float
    eps: float

    def __post_init__(self):
        if not self.power > 0.0:
            raise ValueError(f"UserBudget: power must be positive, got {self.power}")
        if not 0.0 <= self.eps <= self.power:
            raise ValueError(
                f"UserBudget: eps must satisfy 0 <= eps <= power, got eps={self.eps}, power={self.power}"
            )


@dataclass(frozen=True)
class BurstPoint:
    """Optimal duty cycle and the signal power it affords.

    Unpacks as the pair (theta_star, nu_star).
    """

    theta_star: float
    nu_star: float

    def __iter__(self):
        return iter((self.theta_star, self.nu_star))


def optimal_burstiness(budget: UserBudget | float, eps: float | None = None) -> BurstPoint:
    """Duty cycle maximizing theta * C(P/theta - eps), with its signal power.

    Accepts a UserBudget or the pair (power, eps) directly.  The power
    accounting theta*(nu + eps) = P holds exactly at the optimum
    whenever theta* < 1; with theta* = 1 the full budget minus the cost
    is transmitted.
    """
    if not isinstance(budget, UserBudget):
        budget = UserBudget(float(budget), 0.0 if eps is None else float(eps))
    elif eps is not None:
        raise TypeError("optimal_burstiness: eps is only valid with a bare power")
    p, eps = budget.power, budget.eps
    if eps == 0.0:
        return BurstPoint(1.0, p)
    if abs(eps - 1.0) <= 1e-9:
        # 0/0 in the closed form; the limit is P/e.
        theta = min(1.0, p / _E)
    else:
        w = lambert_w0(math.exp(-1.0) * (eps - 1.0))
        theta = min(1.0, p * w / ((eps - 1.0) * (w + 1.0)))
    nu = p / theta - eps
    return BurstPoint(theta, max(nu, 0.0))


def interference_free_rate(budget: UserBudget) -> float:
    """Best single-user rate: burst_rate at the optimal duty cycle."""
    bp = optimal_burstiness(budget)
    return burst_rate(bp.theta_star, budget.power, budget.eps)


def asymptotic_fraction(lam: float) -> float:
    """Small-cost limit of the optimal duty cycle, min(1, lambda).

    lambda stands for P/sqrt(2*eps); the argument must be positive.
    """
    lam = float(lam)
    if not lam > 0.0:
        raise ValueError(f"asymptotic_fraction: lambda must be positive, got {lam}")
    return min(1.0, lam)
