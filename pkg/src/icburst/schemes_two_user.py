"""Burst-mode transmission schemes for the two-user interference channel.

Each user must cover a fixed processing cost per channel use it is
active, so the interesting designs concentrate the power budget on a
fraction theta of the time.  The schemes differ in how the two users'
active windows are arranged:

* Scheme I: both users transmit continuously (theta = 1) and run
  Han-Kobayashi on what is left of the budget after cost.
* Scheme II: non-overlapping windows (time division), each user alone.
* Scheme III: windows overlap; the overlap runs Han-Kobayashi, the
  exclusive remainders are interference free.
* Scheme IV: overlapping windows with all-common decoding, for strong
  cross gains only; receivers decode the interfering codeword.

Rates are in bits per channel use of the whole frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hk_two_user import TwoUserChannel, hk_sum_rate, noisy_interference_test
from .numerics import GridSpec, RegimeError, capacity, maximize_on_grid
from .single_user import interference_free_rate, optimal_burstiness

_TINY = 1e-30

_INNER_SPLIT_GRID = GridSpec((0.0, 0.0), (1.0, 1.0), resolution=0.02, refinements=2, shrink=0.1)


@dataclass(frozen=True)
class SchemeResult:
    """A scheme's best sum rate with the activity fractions that achieve it."""

    rate: float
    profile: tuple
    extra: dict | None = None


@dataclass(frozen=True)
class BurstProfile2:
    """Activity fractions (theta1, theta2) of the two users."""

    theta1: float
    theta2: float

    def __post_init__(self):
        for name, t in (("theta1", self.theta1), ("theta2", self.theta2)):
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"BurstProfile2: {name}={t} outside [0, 1]")


def _burst_arr(theta: np.ndarray, power: float, eps: float) -> np.ndarray:
    """theta * C(power/theta - eps) elementwise, 0 at theta = 0."""
    theta = np.asarray(theta, dtype=float)
    th = np.maximum(theta, _TINY)
    nu = np.maximum(power / th - eps, 0.0)
    return np.where(theta > 0.0, theta * capacity(nu), 0.0)


def _safe_nu_cap(theta: np.ndarray, power: float, eps: float):
    """Signaling power nu = P/theta - eps and its capacity, guarded at theta = 0.

    Entries with theta = 0 get a huge but finite nu; callers must weight
    the returned capacity by a coefficient that vanishes there.
    """
    th = np.maximum(np.asarray(theta, dtype=float), _TINY)
    nu = np.maximum(power / th - eps, 0.0)
    return nu, capacity(nu)


def upper_bound_two_user(ch: TwoUserChannel) -> float:
    """Sum of the two interference-free optima; no scheme can beat it."""
    return interference_free_rate(ch.budget1) + interference_free_rate(ch.budget2)


def normalized_sum_rate(rate: float, upper_bound: float) -> float:
    """rate / upper_bound, clipped into [0, 1] against optimizer round-off."""
    if upper_bound <= 0.0:
        raise ValueError(f"normalized_sum_rate: upper bound must be > 0, got {upper_bound}")
    return min(max(rate / upper_bound, 0.0), 1.0)


def scheme_i(ch: TwoUserChannel, split_grid: GridSpec | None = None) -> SchemeResult:
    """Continuous transmission: Han-Kobayashi on the cost-reduced powers."""
    rate, split = hk_sum_rate(ch.p1 - ch.eps1, ch.p2 - ch.eps2, ch.a, ch.b, grid=split_grid)
    return SchemeResult(rate, (1.0, 1.0), extra={"split": split})


def scheme_ii_tdm(ch: TwoUserChannel, grid: GridSpec | None = None) -> SchemeResult:
    """Time division: disjoint windows, each sized by a 1-D search.

    User 2's window is min(1 - theta1, theta2*): it never pays to exceed
    its solo optimum theta2*.  When theta1* + theta2* <= 1 both users fit
    their solo optima disjointly and the search interval collapses onto
    theta1*, so the result equals the interference-free upper bound.
    """
    t1s, _ = optimal_burstiness(ch.budget1)
    t2s, _ = optimal_burstiness(ch.budget2)
    lo = min(max(0.0, 1.0 - t2s), t1s)
    spec = grid if grid is not None else GridSpec(lo, t1s, resolution=1e-3, refinements=2, shrink=0.1)

    def objective(pts: np.ndarray) -> np.ndarray:
        th1 = pts[:, 0]
        th2 = np.minimum(1.0 - th1, t2s)
        return _burst_arr(th1, ch.p1, ch.eps1) + _burst_arr(th2, ch.p2, ch.eps2)

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    th1 = float(pt[0])
    th2 = min(1.0 - th1, t2s)
    return SchemeResult(val, (th1, th2))


def _hk_arr(
    nu1: np.ndarray, nu2: np.ndarray, a: float, b: float, split_grid: GridSpec
) -> np.ndarray:
    """Elementwise Han-Kobayashi sum rate at signaling powers (nu1, nu2).

    Strong cross gains use the all-common closed form and noisy points
    the treat-as-noise form, both vectorized; anything left falls back
    to a per-point split search.
    """
    if a >= 1.0 and b >= 1.0:
        r = np.minimum(capacity(nu1) + capacity(nu2), capacity(nu1 + a * nu2))
        r = np.minimum(r, capacity(nu2 + b * nu1))
        return np.minimum(r, capacity(a * nu2) + capacity(b * nu1))
    lhs = np.zeros_like(nu1)
    if a > 0.0:
        lhs = lhs + np.sqrt(a) * (b * nu1 + 1.0)
    if b > 0.0:
        lhs = lhs + np.sqrt(b) * (a * nu2 + 1.0)
    noisy = lhs <= 1.0
    out = np.empty_like(nu1)
    out[noisy] = capacity(nu1[noisy] / (1.0 + a * nu2[noisy])) + capacity(
        nu2[noisy] / (1.0 + b * nu1[noisy])
    )
    for i in np.flatnonzero(~noisy):
        out[i], _ = hk_sum_rate(float(nu1[i]), float(nu2[i]), a, b, grid=split_grid)
    return out


def _scheme_iii_values(
    ch: TwoUserChannel, th1: np.ndarray, th2: np.ndarray, split_grid: GridSpec
) -> np.ndarray:
    """Scheme III rate at each profile; -inf where the windows cannot overlap."""
    overlap = th1 + th2 - 1.0
    feasible = overlap >= -1e-12
    overlap = np.maximum(overlap, 0.0)
    nu1, cap1 = _safe_nu_cap(th1, ch.p1, ch.eps1)
    nu2, cap2 = _safe_nu_cap(th2, ch.p2, ch.eps2)
    solo1 = np.where(th1 > 0.0, (1.0 - th2) * cap1, 0.0)
    solo2 = np.where(th2 > 0.0, (1.0 - th1) * cap2, 0.0)
    joint = np.zeros_like(th1)
    on = feasible & (overlap > 0.0)
    if np.any(on):
        joint[on] = overlap[on] * _hk_arr(nu1[on], nu2[on], ch.a, ch.b, split_grid)
    return np.where(feasible, solo1 + solo2 + joint, -np.inf)


def _overlap_box(ch: TwoUserChannel) -> tuple[float, float]:
    """Lower corner of the profile box searched by schemes III and IV.

    Shrinking a window below 1 - (other user's solo optimum) only
    steals exclusive time the other user cannot use, so those profiles
    are dominated and excluded from the search.
    """
    t1s, _ = optimal_burstiness(ch.budget1)
    t2s, _ = optimal_burstiness(ch.budget2)
    return max(0.0, 1.0 - t2s), max(0.0, 1.0 - t1s)


def scheme_iii_profile(
    ch: TwoUserChannel,
    theta1: float,
    theta2: float,
    split_grid: GridSpec | None = None,
) -> float:
    """Scheme III rate at a fixed profile (windows must overlap)."""
    BurstProfile2(theta1, theta2)
    if theta1 + theta2 < 1.0 - 1e-12:
        raise ValueError(
            f"scheme_iii_profile: windows ({theta1}, {theta2}) do not overlap"
        )
    inner = split_grid if split_grid is not None else _INNER_SPLIT_GRID
    val = _scheme_iii_values(ch, np.array([theta1]), np.array([theta2]), inner)
    return float(val[0])


def scheme_iii(
    ch: TwoUserChannel,
    grid: GridSpec | None = None,
    split_grid: GridSpec | None = None,
) -> SchemeResult:
    """Overlapping windows with Han-Kobayashi in the overlap, 2-D search."""
    lo1, lo2 = _overlap_box(ch)
    spec = grid if grid is not None else GridSpec(
        (lo1, lo2), (1.0, 1.0), resolution=0.01, refinements=2, shrink=0.1
    )
    inner = split_grid if split_grid is not None else _INNER_SPLIT_GRID

    def objective(pts: np.ndarray) -> np.ndarray:
        return _scheme_iii_values(ch, pts[:, 0], pts[:, 1], inner)

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    return SchemeResult(val, (float(pt[0]), float(pt[1])))


def _scheme_iv_values(ch: TwoUserChannel, th1: np.ndarray, th2: np.ndarray) -> np.ndarray:
    """Scheme IV rate at each profile; -inf where the windows cannot overlap."""
    a, b = ch.a, ch.b
    overlap = th1 + th2 - 1.0
    feasible = overlap >= -1e-12
    overlap = np.maximum(overlap, 0.0)
    nu1, cap1 = _safe_nu_cap(th1, ch.p1, ch.eps1)
    nu2, cap2 = _safe_nu_cap(th2, ch.p2, ch.eps2)
    on1 = th1 > 0.0
    on2 = th2 > 0.0
    both = on1 & on2
    cap1 = np.where(on1, cap1, 0.0)
    cap2 = np.where(on2, cap2, 0.0)
    cap_x1 = np.where(both, capacity(np.where(both, nu1 + a * nu2, 0.0)), 0.0)
    cap_x2 = np.where(both, capacity(np.where(both, nu2 + b * nu1, 0.0)), 0.0)
    cap_a2 = np.where(on2, capacity(a * nu2), 0.0)
    cap_b1 = np.where(on1, capacity(b * nu1), 0.0)
    bracket_a = th1 * cap1 + th2 * cap2
    bracket_b = overlap * cap_x1 + (1.0 - th2) * cap1 + (1.0 - th1) * cap_a2
    bracket_d = overlap * cap_x2 + (1.0 - th1) * cap2 + (1.0 - th2) * cap_b1
    val = np.minimum(bracket_a, np.minimum(bracket_b, bracket_d))
    return np.where(feasible, val, -np.inf)


def _require_strong(ch: TwoUserChannel, who: str) -> None:
    if ch.a < 1.0 or ch.b < 1.0:
        raise RegimeError(
            f"{who}: needs strong cross gains a >= 1 and b >= 1, got a={ch.a}, b={ch.b}"
        )


def scheme_iv_profile(ch: TwoUserChannel, theta1: float, theta2: float) -> float:
    """Scheme IV rate at a fixed profile (strong gains, overlapping windows)."""
    _require_strong(ch, "scheme_iv_profile")
    BurstProfile2(theta1, theta2)
    if theta1 + theta2 < 1.0 - 1e-12:
        raise ValueError(
            f"scheme_iv_profile: windows ({theta1}, {theta2}) do not overlap"
        )
    val = _scheme_iv_values(ch, np.array([theta1]), np.array([theta2]))
    return float(val[0])


def scheme_iv(ch: TwoUserChannel, grid: GridSpec | None = None) -> SchemeResult:
    """Overlapping windows, interfering codewords decoded in full.

    Only defined for strong cross gains (a >= 1 and b >= 1); elsewhere
    raises RegimeError.
    """
    _require_strong(ch, "scheme_iv")
    lo1, lo2 = _overlap_box(ch)
    spec = grid if grid is not None else GridSpec(
        (lo1, lo2), (1.0, 1.0), resolution=0.01, refinements=2, shrink=0.1
    )

    def objective(pts: np.ndarray) -> np.ndarray:
        return _scheme_iv_values(ch, pts[:, 0], pts[:, 1])

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    return SchemeResult(val, (float(pt[0]), float(pt[1])))
