"""Three-user cascade Z interference channel with burst scheduling.

The cascade topology is one-directional: transmitter 1 reaches
receiver 2 with gain a1, transmitter 2 reaches receiver 3 with gain a2,
and nothing else crosses.  A gamma recursion turns that chain structure
into a closed-form sum rate for fixed signaling powers: each receiver i
keeps a fraction gamma_i of its own SNR after the best choice of
decoding or tolerating its single interferer.

On top of that sit the burst schedules.  Users 1 and 3 open their
windows at the start of the frame, user 2 at the end, so a profile
(theta1, theta2, theta3) splits the frame into segments where different
user subsets are on; each segment contributes its subset's sum rate.
The scheduling schemes mirror the two-user ones: continuous (I), time
division (II), overlap with the chain rates (III), and overlap with
receiver 2 decoding and cancelling user 1 (IV, for the mixed regime
a1 >= 1 > a2 > 0 only).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import GridSpec, InfeasibleError, RegimeError, capacity, maximize_on_grid
from .schemes_two_user import SchemeResult, _burst_arr, _safe_nu_cap
from .single_user import UserBudget, interference_free_rate, optimal_burstiness


@dataclass(frozen=True)
class CgzicChannel:
    """Gains and budgets of the three-user cascade Z channel."""

    a1: float
    a2: float
    p1: float
    p2: float
    p3: float
    eps1: float
    eps2: float
    eps3: float

    def __post_init__(self):
        if self.a1 < 0.0 or self.a2 < 0.0:
            raise ValueError(f"CgzicChannel: gains must be >= 0, got ({self.a1}, {self.a2})")
        for p, e in self.budgets_raw():
            UserBudget(p, e)

    def budgets_raw(self):
        return (self.p1, self.eps1), (self.p2, self.eps2), (self.p3, self.eps3)

    @property
    def budgets(self) -> tuple[UserBudget, UserBudget, UserBudget]:
        return tuple(UserBudget(p, e) for p, e in self.budgets_raw())


@dataclass(frozen=True)
class BurstProfile3:
    """Activity fractions (theta1, theta2, theta3) of the three users."""

    theta1: float
    theta2: float
    theta3: float

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta3"):
            t = getattr(self, name)
            if not 0.0 <= t <= 1.0:
                raise ValueError(f"BurstProfile3: {name}={t} outside [0, 1]")


def _gamma_step(a: float, g_prev, p_prev, p_cur):
    """One link of the gamma recursion, elementwise over powers.

    Weak link (a <= previous gamma): the interference is tolerated,
    gamma = 1/(1 + a*p_prev).  Otherwise the interferer's common part
    is decoded first and gamma = min(((a - g)p_prev + p_cur) /
    (p_cur + g*p_prev*p_cur), 1), which is 1 whenever p_cur = 0.
    """
    g_prev = np.asarray(g_prev, dtype=float)
    p_prev = np.asarray(p_prev, dtype=float)
    p_cur = np.asarray(p_cur, dtype=float)
    tolerate = 1.0 / (1.0 + a * p_prev)
    num = (a - g_prev) * p_prev + p_cur
    den = p_cur * (1.0 + g_prev * p_prev)
    safe = den > 0.0
    decoded = np.where(safe, np.minimum(np.where(safe, num, 0.0) / np.where(safe, den, 1.0), 1.0), 1.0)
    return np.where(a <= g_prev, tolerate, decoded)


def gamma_chain(a1, a2, p1, p2, p3):
    """Residual SNR fractions (gamma1, gamma2, gamma3) along the cascade.

    Scalar or elementwise over gain and power arrays; gamma1 is always 1
    and each gamma lies in (0, 1].
    """
    a1a, a2a = (np.asarray(a, dtype=float) for a in (a1, a2))
    if np.any(a1a < 0.0) or np.any(a2a < 0.0):
        raise ValueError(f"gamma_chain: gains must be >= 0, got ({a1}, {a2})")
    p1a, p2a, p3a = (np.asarray(p, dtype=float) for p in (p1, p2, p3))
    if np.any(p1a < 0.0) or np.any(p2a < 0.0) or np.any(p3a < 0.0):
        raise ValueError("gamma_chain: powers must be >= 0")
    g1 = np.ones(
        np.broadcast_shapes(a1a.shape, a2a.shape, p1a.shape, p2a.shape, p3a.shape)
    )
    g2 = _gamma_step(a1a, g1, p1a, p2a)
    g3 = _gamma_step(a2a, g2, p2a, p3a)
    if all(np.ndim(v) == 0 for v in (a1, a2, p1, p2, p3)):
        return float(g1), float(g2), float(g3)
    return g1, g2, g3


def cgzic_sum_rate(p1, p2, p3, a1, a2):
    """Closed-form three-user sum rate at fixed signaling powers."""
    g1, g2, g3 = gamma_chain(a1, a2, p1, p2, p3)
    return capacity(g1 * np.asarray(p1, float)) + capacity(g2 * np.asarray(p2, float)) + capacity(
        g3 * np.asarray(p3, float)
    )


def zic_pair(p_first, p_second, gain: float):
    """Two-user restriction of the chain rate: first user into second's receiver.

    C(p_first) + C(gamma * p_second) with gamma from one recursion step.
    For gain <= 1 this is treating interference as noise; for gain >= 1
    it equals min(C(p_first) + C(p_second), C(gain*p_first + p_second)).
    """
    g = _gamma_step(gain, np.ones_like(np.asarray(p_first, float)), p_first, p_second)
    out = capacity(np.asarray(p_first, float)) + capacity(g * np.asarray(p_second, float))
    if np.ndim(p_first) == 0 and np.ndim(p_second) == 0:
        return float(out)
    return out


def upper_bound_cgzic(ch: CgzicChannel) -> float:
    """Sum of the three interference-free optima."""
    return sum(interference_free_rate(b) for b in ch.budgets)


def _solo_fractions(ch: CgzicChannel) -> tuple[float, float, float]:
    return tuple(optimal_burstiness(b).theta_star for b in ch.budgets)


def cgzic_scheme_i(ch: CgzicChannel) -> SchemeResult:
    """Continuous transmission: chain rate on the cost-reduced powers."""
    rate = cgzic_sum_rate(ch.p1 - ch.eps1, ch.p2 - ch.eps2, ch.p3 - ch.eps3, ch.a1, ch.a2)
    return SchemeResult(float(rate), (1.0, 1.0, 1.0))


def cgzic_scheme_ii_tdm(ch: CgzicChannel, grid: GridSpec | None = None) -> SchemeResult:
    """Time division: users 1 and 3 share the front of the frame, user 2 the back.

    Users 1 and 3 do not interfere with each other, so only
    max(theta1, theta3) matters to user 2, whose window caps at its solo
    optimum theta2*.  Independent of the gains.  When every solo window
    fits disjointly the search collapses onto the solo optima and the
    value equals the interference-free upper bound.
    """
    t1s, t2s, t3s = _solo_fractions(ch)
    lo1 = min(max(0.0, 1.0 - t2s), t1s)
    lo3 = min(max(0.0, 1.0 - t2s), t3s)
    spec = grid if grid is not None else GridSpec(
        (lo1, lo3), (t1s, t3s), resolution=1e-3, refinements=2, shrink=0.1
    )

    def objective(pts: np.ndarray) -> np.ndarray:
        th1 = pts[:, 0]
        th3 = pts[:, 1]
        th2 = np.minimum(1.0 - np.maximum(th1, th3), t2s)
        return (
            _burst_arr(th1, ch.p1, ch.eps1)
            + _burst_arr(th2, ch.p2, ch.eps2)
            + _burst_arr(th3, ch.p3, ch.eps3)
        )

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    th1, th3 = float(pt[0]), float(pt[1])
    th2 = min(1.0 - max(th1, th3), t2s)
    return SchemeResult(val, (th1, th2, th3))


def _profile_box(ch: CgzicChannel) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
    """Constraint box for the overlap schemes: windows reach the frame ends.

    theta1 and theta3 may not shrink below 1 - theta2* (user 2 cannot
    use the freed time), theta2 not below 1 - max(theta1*, theta3*).
    The remaining coupling theta2 + min(theta1, theta3) >= 1 is enforced
    pointwise by the objectives.
    """
    t1s, t2s, t3s = _solo_fractions(ch)
    lo_13 = max(0.0, 1.0 - t2s)
    lo_2 = max(0.0, 1.0 - max(t1s, t3s))
    return (lo_13, lo_2, lo_13), (1.0, 1.0, 1.0)


def _check_profile(ch: CgzicChannel, profile: BurstProfile3) -> None:
    t1s, t2s, t3s = _solo_fractions(ch)
    th1, th2, th3 = profile.theta1, profile.theta2, profile.theta3
    slack = 1e-9
    if th1 < 1.0 - t2s - slack or th3 < 1.0 - t2s - slack:
        raise InfeasibleError(
            f"profile ({th1}, {th2}, {th3}): outer windows must be >= {1.0 - t2s:.6g}"
        )
    if th2 < 1.0 - max(t1s, t3s) - slack:
        raise InfeasibleError(
            f"profile ({th1}, {th2}, {th3}): theta2 must be >= {1.0 - max(t1s, t3s):.6g}"
        )
    if th2 + min(th1, th3) < 1.0 - slack:
        raise InfeasibleError(
            f"profile ({th1}, {th2}, {th3}): theta2 + min(theta1, theta3) must reach 1"
        )


def _scheme_iii_values(
    ch: CgzicChannel, th1: np.ndarray, th2: np.ndarray, th3: np.ndarray
) -> np.ndarray:
    """Scheme III rate at each profile; -inf where user 2's window leaves a gap.

    Segments for theta1 >= theta3: users {1,3} alone for 1 - theta2,
    all three for theta2 + theta3 - 1, users {1,2} for theta1 - theta3,
    user 2 alone for 1 - theta1.  theta1 < theta3 mirrors with a {2,3}
    segment.  Every coefficient of a capacity term vanishes whenever its
    user's theta is 0, so the guarded nu values never leak through.
    """
    feasible = th2 + np.minimum(th1, th3) >= 1.0 - 1e-12
    nu1, cap1 = _safe_nu_cap(th1, ch.p1, ch.eps1)
    nu2, cap2 = _safe_nu_cap(th2, ch.p2, ch.eps2)
    nu3, cap3 = _safe_nu_cap(th3, ch.p3, ch.eps3)
    cap1 = np.where(th1 > 0.0, cap1, 0.0)
    cap2 = np.where(th2 > 0.0, cap2, 0.0)
    cap3 = np.where(th3 > 0.0, cap3, 0.0)
    solo2 = (1.0 - np.maximum(th1, th3)) * cap2
    pair13 = (1.0 - th2) * (cap1 + cap3)
    tri_coef = np.maximum(th2 + np.minimum(th1, th3) - 1.0, 0.0)
    tri = np.where(tri_coef > 0.0, tri_coef * cgzic_sum_rate(nu1, nu2, nu3, ch.a1, ch.a2), 0.0)
    coef12 = np.maximum(th1 - th3, 0.0)
    pair12 = np.where(coef12 > 0.0, coef12 * zic_pair(nu1, nu2, ch.a1), 0.0)
    coef23 = np.maximum(th3 - th1, 0.0)
    pair23 = np.where(coef23 > 0.0, coef23 * zic_pair(nu2, nu3, ch.a2), 0.0)
    return np.where(feasible, solo2 + pair13 + tri + pair12 + pair23, -np.inf)


def cgzic_scheme_iii_profile(ch: CgzicChannel, profile: BurstProfile3) -> float:
    """Scheme III rate at one feasible profile."""
    _check_profile(ch, profile)
    val = _scheme_iii_values(
        ch,
        np.array([profile.theta1]),
        np.array([profile.theta2]),
        np.array([profile.theta3]),
    )
    return float(val[0])


def cgzic_scheme_iii(ch: CgzicChannel, grid: GridSpec | None = None) -> SchemeResult:
    """Best Scheme III rate over the profile box, 3-D grid search."""
    lo, hi = _profile_box(ch)
    spec = grid if grid is not None else GridSpec(lo, hi, resolution=0.02, refinements=2, shrink=0.1)

    def objective(pts: np.ndarray) -> np.ndarray:
        return _scheme_iii_values(ch, pts[:, 0], pts[:, 1], pts[:, 2])

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    return SchemeResult(val, (float(pt[0]), float(pt[1]), float(pt[2])))


def _require_mixed(ch: CgzicChannel, who: str) -> None:
    if not (ch.a1 >= 1.0 and 0.0 < ch.a2 < 1.0):
        raise RegimeError(
            f"{who}: needs the mixed regime a1 >= 1 and 0 < a2 < 1, "
            f"got a1={ch.a1}, a2={ch.a2}"
        )


def _scheme_iv_values(
    ch: CgzicChannel, th1: np.ndarray, th2: np.ndarray, th3: np.ndarray
) -> np.ndarray:
    """Scheme IV rate at each profile; -inf where user 2's window leaves a gap.

    User 1's rate is capped by what receiver 2 can decode (clean for
    1 - theta2, through user 2's signal for theta1 + theta2 - 1), after
    which receiver 2 is interference free.  User 3 treats user 2 as
    noise during their theta2 + theta3 - 1 overlap.
    """
    a1, a2 = ch.a1, ch.a2
    feasible = th2 + np.minimum(th1, th3) >= 1.0 - 1e-12
    ov12 = np.maximum(th1 + th2 - 1.0, 0.0)
    ov23 = np.maximum(th2 + th3 - 1.0, 0.0)
    nu1, cap1 = _safe_nu_cap(th1, ch.p1, ch.eps1)
    nu2, cap2 = _safe_nu_cap(th2, ch.p2, ch.eps2)
    nu3, cap3 = _safe_nu_cap(th3, ch.p3, ch.eps3)
    on1 = th1 > 0.0
    on2 = th2 > 0.0
    cap1 = np.where(on1, cap1, 0.0)
    cap2 = np.where(on2, cap2, 0.0)
    cap3 = np.where(th3 > 0.0, cap3, 0.0)
    cap_a11 = np.where(on1, capacity(a1 * nu1), 0.0)
    cap_a11_sh = np.where(on1, capacity(a1 * nu1 / (1.0 + np.where(on2, nu2, 0.0))), 0.0)
    cap_3_sh = np.where(th3 > 0.0, capacity(nu3 / (1.0 + a2 * np.where(on2, nu2, 0.0))), 0.0)
    r1 = np.minimum(th1 * cap1, (1.0 - th2) * cap_a11 + ov12 * cap_a11_sh)
    r2 = th2 * cap2
    r3 = (1.0 - th2) * cap3 + ov23 * cap_3_sh
    return np.where(feasible, r1 + r2 + r3, -np.inf)


def cgzic_scheme_iv_profile(ch: CgzicChannel, profile: BurstProfile3) -> float:
    """Scheme IV rate at one feasible profile (mixed regime only)."""
    _require_mixed(ch, "cgzic_scheme_iv_profile")
    _check_profile(ch, profile)
    val = _scheme_iv_values(
        ch,
        np.array([profile.theta1]),
        np.array([profile.theta2]),
        np.array([profile.theta3]),
    )
    return float(val[0])


def cgzic_scheme_iv(ch: CgzicChannel, grid: GridSpec | None = None) -> SchemeResult:
    """Best Scheme IV rate over the profile box; records the argmax profile."""
    _require_mixed(ch, "cgzic_scheme_iv")
    lo, hi = _profile_box(ch)
    spec = grid if grid is not None else GridSpec(lo, hi, resolution=0.02, refinements=2, shrink=0.1)

    def objective(pts: np.ndarray) -> np.ndarray:
        return _scheme_iv_values(ch, pts[:, 0], pts[:, 1], pts[:, 2])

    pt, val = maximize_on_grid(objective, spec, vectorized=True)
    return SchemeResult(val, (float(pt[0]), float(pt[1]), float(pt[2])))
