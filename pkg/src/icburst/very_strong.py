"""Very strong interference tests and thresholds under processing cost.

Interference is very strong when both users can keep their solo-optimal
burst schedules (theta1*, theta2*) and still each decode and subtract
the other's codeword at no rate loss, so the interference-free upper
bound is met exactly.  The exact condition on the cross gain a is

    1 + nu2*  <=  (1 + a*nu2*)^rho1 * (1 + a*nu2*/(1 + nu1*))^(1-rho1)

with rho1 = (1 - theta1*)/theta2*, and the mirrored condition on b with
rho2 = (1 - theta2*)/theta1*.  The two conditions are separable, so the
regime boundary is a pair of scalar thresholds (a_min, b_min), each
found by bisection on its own condition.

A separate small-budget limit (P and eps jointly small at fixed
lambda = P/sqrt(2*eps)) admits closed-form thresholds; those are kept
as a distinct, labeled operation because they carry truncation error at
finite parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .hk_two_user import TwoUserChannel
from .numerics import RegimeError
from .single_user import UserBudget, optimal_burstiness

_BISECT_TOL = 1e-9


@dataclass(frozen=True)
class RhoPair:
    """Exclusive-time ratios rho1 = (1-theta1*)/theta2*, rho2 = (1-theta2*)/theta1*."""

    rho1: float
    rho2: float

    def __post_init__(self):
        if self.rho1 < 0.0 or self.rho2 < 0.0:
            raise ValueError(f"RhoPair: values must be >= 0, got ({self.rho1}, {self.rho2})")


def rho_pair(budget1: UserBudget, budget2: UserBudget) -> RhoPair:
    t1, _ = optimal_burstiness(budget1)
    t2, _ = optimal_burstiness(budget2)
    return RhoPair((1.0 - t1) / t2, (1.0 - t2) / t1)


def _solo_points(ch: TwoUserChannel):
    p1 = optimal_burstiness(ch.budget1)
    p2 = optimal_burstiness(ch.budget2)
    return p1, p2


def _margin(gain: float, rho: float, nu_same: float, nu_cross: float) -> float:
    """Log-domain slack of one condition at cross gain `gain`.

    `nu_same` is the interfered user's signaling power (it appears on
    both sides), `nu_cross` the interfering-side power in the shadowing
    denominator.  Positive margin means the condition holds.
    """
    rhs = rho * math.log1p(gain * nu_same) + (1.0 - rho) * math.log1p(
        gain * nu_same / (1.0 + nu_cross)
    )
    return rhs - math.log1p(nu_same)


def is_very_strong(a: float, b: float, ch: TwoUserChannel) -> bool:
    """Whether cross gains (a, b) are very strong for this channel's budgets.

    The gains under test are the explicit arguments; the channel
    supplies only the power/cost budgets.  When theta1* + theta2* <= 1
    the solo optima fit disjointly, time division alone meets the upper
    bound, and the test is vacuously true.
    """
    if a < 0.0 or b < 0.0:
        raise ValueError(f"is_very_strong: gains must be >= 0, got ({a}, {b})")
    (t1, nu1), (t2, nu2) = _solo_points(ch)
    if t1 + t2 <= 1.0:
        return True
    rho1 = (1.0 - t1) / t2
    rho2 = (1.0 - t2) / t1
    return (
        _margin(a, rho1, nu2, nu1) >= -1e-12
        and _margin(b, rho2, nu1, nu2) >= -1e-12
    )


def _solve_threshold(rho: float, nu_same: float, nu_cross: float, p_hint: float) -> float:
    """Smallest gain with nonnegative margin, by bisection.

    The margin is strictly increasing in the gain, is negative at 1 in
    the non-degenerate regime, and the classical threshold 1 + P bounds
    the root from above, so [1, 2 + P] brackets it.  rho = 0 (the
    corresponding theta* = 1) has the explicit root 1 + nu_cross.
    """
    if math.log1p(nu_same) <= 1e-15:
        return 0.0
    if rho == 0.0:
        return 1.0 + nu_cross
    lo, hi = 1.0, 2.0 + p_hint
    if _margin(lo, rho, nu_same, nu_cross) >= 0.0:
        return lo
    while _margin(hi, rho, nu_same, nu_cross) < 0.0:
        hi *= 2.0
        if hi > 1e12:
            raise ArithmeticError("very strong threshold: bracket expansion failed")
    while hi - lo > _BISECT_TOL:
        mid = 0.5 * (lo + hi)
        if _margin(mid, rho, nu_same, nu_cross) >= 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def very_strong_thresholds(ch: TwoUserChannel) -> tuple[float, float]:
    """Boundary gains (a_min, b_min) of the very strong regime.

    is_very_strong(a, b, ch) holds exactly when a >= a_min and
    b >= b_min.  Budgets whose solo optima fit disjointly
    (theta1* + theta2* <= 1) meet the upper bound at any gains, so the
    thresholds collapse to (0, 0).  With both theta* = 1 (for instance
    zero cost) the thresholds are the classical (1 + nu1*, 1 + nu2*)
    exactly.
    """
    (t1, nu1), (t2, nu2) = _solo_points(ch)
    if t1 + t2 <= 1.0:
        return 0.0, 0.0
    rho1 = (1.0 - t1) / t2
    rho2 = (1.0 - t2) / t1
    a_min = _solve_threshold(rho1, nu2, nu1, max(ch.p1, ch.p2))
    b_min = _solve_threshold(rho2, nu1, nu2, max(ch.p1, ch.p2))
    return a_min, b_min


@dataclass(frozen=True)
class AsymptoticBudget:
    """Small-budget limit parameters: lambda_i = p_i / sqrt(2 eps_i).

    The powers and costs are the finite parameters the limit is taken
    along; zero cost sends lambda to infinity, which lands in the
    lambda >= 1 dispatch branches.
    """

    lambda1: float
    lambda2: float
    p1: float
    p2: float
    eps1: float
    eps2: float

    def __post_init__(self):
        if self.p1 <= 0.0 or self.p2 <= 0.0:
            raise ValueError("AsymptoticBudget: powers must be > 0")
        if self.eps1 < 0.0 or self.eps2 < 0.0:
            raise ValueError("AsymptoticBudget: costs must be >= 0")
        if not (self.lambda1 > 0.0 and self.lambda2 > 0.0):
            raise ValueError("AsymptoticBudget: lambda values must be > 0")
        for lam, p, eps in ((self.lambda1, self.p1, self.eps1), (self.lambda2, self.p2, self.eps2)):
            if eps == 0.0:
                if not math.isinf(lam):
                    raise ValueError("AsymptoticBudget: zero cost requires lambda = inf")
            elif abs(lam - p / math.sqrt(2.0 * eps)) > 1e-9:
                raise ValueError(
                    f"AsymptoticBudget: lambda={lam} inconsistent with p={p}, eps={eps}"
                )

    @classmethod
    def from_powers(cls, p1: float, p2: float, eps1: float, eps2: float) -> "AsymptoticBudget":
        lam1 = math.inf if eps1 == 0.0 else p1 / math.sqrt(2.0 * eps1)
        lam2 = math.inf if eps2 == 0.0 else p2 / math.sqrt(2.0 * eps2)
        return cls(lam1, lam2, p1, p2, eps1, eps2)


def asymptotic_thresholds(budget: AsymptoticBudget) -> tuple[float, float]:
    """Closed-form small-budget thresholds (a_bar, b_bar), by lambda case.

    Cases: both lambda < 1; lambda1 < 1 <= lambda2; lambda2 < 1 <=
    lambda1; both >= 1 (classical 1 + P thresholds).  In the both-small
    case the solo fractions are theta_i* = lambda_i, and the regime is
    only meaningful when they overlap, so lambda1 + lambda2 must
    exceed 1.
    """
    l1, l2 = budget.lambda1, budget.lambda2
    p1, p2 = budget.p1, budget.p2
    s1 = math.sqrt(2.0 * budget.eps1)
    s2 = math.sqrt(2.0 * budget.eps2)
    if l1 < 1.0 and l2 < 1.0:
        if l1 + l2 <= 1.0:
            raise RegimeError(
                f"asymptotic_thresholds: lambda1+lambda2 = {l1 + l2} <= 1, "
                "solo bursts do not overlap"
            )
        a_bar = (p2 + s1 * p2) / (p2 + s2 * (s1 - p1))
        b_bar = (p1 + s2 * p1) / (p1 + s1 * (s2 - p2))
    elif l1 < 1.0 <= l2:
        a_bar = (1.0 + s1) / (1.0 + s1 - p1)
        b_bar = 1.0 + p2 - budget.eps2
    elif l2 < 1.0 <= l1:
        a_bar = 1.0 + p1 - budget.eps1
        b_bar = (1.0 + s2) / (1.0 + s2 - p2)
    else:
        a_bar = 1.0 + p1
        b_bar = 1.0 + p2
    return a_bar, b_bar
