"""Simple Han-Kobayashi sum rates for the two-user Gaussian interference channel.

Receiver i sees its own signal at unit gain plus the other transmitter's
signal at cross gain (a into receiver 1, b into receiver 2).  Each user
splits its signaling power into a common part, decoded by both
receivers, and a private part treated as noise at the other receiver;
tau_i is the common share of user i.  With Gaussian codebooks the
achievable sum rate of this family is the minimum of four brackets
(psi1..psi4) coming from the two receivers' MAC-style constraints.

Two regimes bypass the split search entirely:

* strong interference (a >= 1 and b >= 1): all-common, tau = (1, 1);
* noisy interference, sqrt(a)*(b*p1 + 1) + sqrt(b)*(a*p2 + 1) <= 1:
  all-private, tau = (0, 0), i.e. treating interference as noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import GridSpec, capacity, maximize_on_grid
from .single_user import UserBudget

_DEFAULT_SPLIT_GRID = GridSpec((0.0, 0.0), (1.0, 1.0), resolution=0.01, refinements=2, shrink=0.1)


@dataclass(frozen=True)
class PowerSplit:
    """Common-power shares (tau1, tau2), each in [0, 1].

    Unpacks as the pair (tau1, tau2).
    """

    tau1: float
    tau2: float

    def __post_init__(self):
        for name, t in (("tau1", self.tau1), ("tau2", self.tau2)):
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"PowerSplit: {name}={t} outside [0, 1]")

    def __iter__(self):
        return iter((self.tau1, self.tau2))


@dataclass(frozen=True)
class TwoUserChannel:
    """Cross gains and per-user budgets of the two-user interference channel."""

    a: float
    b: float
    p1: float
    p2: float
    eps1: float
    eps2: float

    def __post_init__(self):
        if self.a < 0.0 or self.b < 0.0:
            raise ValueError(f"TwoUserChannel: gains must be >= 0, got a={self.a}, b={self.b}")
        UserBudget(self.p1, self.eps1)
        UserBudget(self.p2, self.eps2)

    @property
    def budget1(self) -> UserBudget:
        return UserBudget(self.p1, self.eps1)

    @property
    def budget2(self) -> UserBudget:
        return UserBudget(self.p2, self.eps2)


def _check_powers(p1: float, p2: float) -> tuple[float, float]:
    if p1 < -1e-12 or p2 < -1e-12:
        raise ValueError(f"hk: signaling powers must be >= 0, got ({p1}, {p2})")
    return max(p1, 0.0), max(p2, 0.0)


def hk_psi(p1: float, p2: float, a: float, b: float, split: PowerSplit):
    """The four sum-rate brackets at signaling powers (p1, p2) and a fixed split.

    Returns (psi1, psi2, psi3, psi4) in bits.  psi1 sums each user's
    full-signal rate against the other's private interference, psi4 the
    two receivers' joint own-plus-foreign-common constraints; psi2/psi3
    mix one receiver's joint constraint with the other user's private
    remainder.
    """
    p1, p2 = _check_powers(p1, p2)
    if a < 0.0 or b < 0.0:
        raise ValueError(f"hk_psi: gains must be >= 0, got ({a}, {b})")
    t1, t2 = split.tau1, split.tau2
    den1 = 1.0 + a * (1.0 - t2) * p2
    den2 = 1.0 + b * (1.0 - t1) * p1
    psi1 = capacity(p1 / den1) + capacity(p2 / den2)
    psi2 = capacity((p1 + a * t2 * p2) / den1) + capacity((1.0 - t2) * p2 / den2)
    psi3 = capacity((1.0 - t1) * p1 / den1) + capacity((p2 + b * t1 * p1) / den2)
    psi4 = capacity(((1.0 - t1) * p1 + a * t2 * p2) / den1) + capacity(
        ((1.0 - t2) * p2 + b * t1 * p1) / den2
    )
    return psi1, psi2, psi3, psi4


def hk_sum_rate_fixed_split(p1: float, p2: float, a: float, b: float, split: PowerSplit) -> float:
    """Achievable sum rate at one split: min(psi1, psi2, psi3, psi4)."""
    return min(hk_psi(p1, p2, a, b, split))


def noisy_interference_test(p1: float, p2: float, a: float, b: float) -> bool:
    """True when treating interference as noise is sum-rate optimal.

    Condition: sqrt(a)*(b*p1 + 1) + sqrt(b)*(a*p2 + 1) <= 1.  The terms
    are formed only for positive gains so infinite powers on a dead
    cross-link (gain 0) cannot poison the test.
    """
    lhs = 0.0
    if a > 0.0:
        lhs += math.sqrt(a) * (b * p1 + 1.0)
    if b > 0.0:
        lhs += math.sqrt(b) * (a * p2 + 1.0)
    return lhs <= 1.0


def _min_psi_on_splits(p1: float, p2: float, a: float, b: float, pts: np.ndarray) -> np.ndarray:
    """min over the four brackets, vectorized over an (m, 2) array of splits."""
    t1 = pts[:, 0]
    t2 = pts[:, 1]
    den1 = 1.0 + a * (1.0 - t2) * p2
    den2 = 1.0 + b * (1.0 - t1) * p1
    r1 = capacity(p1 / den1) + capacity(p2 / den2)
    r2 = capacity((p1 + a * t2 * p2) / den1) + capacity((1.0 - t2) * p2 / den2)
    r3 = capacity((1.0 - t1) * p1 / den1) + capacity((p2 + b * t1 * p1) / den2)
    r4 = capacity(((1.0 - t1) * p1 + a * t2 * p2) / den1) + capacity(
        ((1.0 - t2) * p2 + b * t1 * p1) / den2
    )
    return np.minimum(np.minimum(r1, r2), np.minimum(r3, r4))


def hk_sum_rate(
    p1: float,
    p2: float,
    a: float,
    b: float,
    grid: GridSpec | None = None,
) -> tuple[float, PowerSplit]:
    """Best simple Han-Kobayashi sum rate over power splits.

    Strong and noisy regimes use their closed-form splits; anywhere else
    the split square [0,1]^2 is scanned with `grid` (default resolution
    0.01 with two refinement rounds).
    """
    p1, p2 = _check_powers(p1, p2)
    if a >= 1.0 and b >= 1.0:
        split = PowerSplit(1.0, 1.0)
        return hk_sum_rate_fixed_split(p1, p2, a, b, split), split
    if noisy_interference_test(p1, p2, a, b):
        split = PowerSplit(0.0, 0.0)
        return hk_sum_rate_fixed_split(p1, p2, a, b, split), split
    spec = grid if grid is not None else _DEFAULT_SPLIT_GRID
    pt, val = maximize_on_grid(
        lambda pts: _min_psi_on_splits(p1, p2, a, b, pts), spec, vectorized=True
    )
    return val, PowerSplit(float(pt[0]), float(pt[1]))
