"""Numerical primitives shared by every model in the package.

All rates are in bits per channel use.  The only special function needed
anywhere is the principal branch of the Lambert W function, implemented
here with a Halley iteration so the package has no dependency beyond
numpy.  The grid maximizer is the single optimizer used by every
scheduling scheme; it is deterministic by construction (fixed grids,
first-scanned argmax on ties).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_LN2 = math.log(2.0)
_INV_E = math.exp(-1.0)


class InfeasibleError(ValueError):
    """A power/duty-cycle combination violates its energy budget."""


class RegimeError(ValueError):
    """A quantity was requested outside the parameter regime where it is defined."""


def capacity(snr):
    """Gaussian capacity map (1/2)*log2(1 + snr) in bits per use.

    Accepts a scalar or an ndarray.  Negative SNR is rejected: it always
    means an infeasible power computation happened upstream.
    """
    s = np.asarray(snr, dtype=float)
    if np.any(s < 0.0):
        raise ValueError("capacity: negative SNR (infeasible power upstream)")
    c = 0.5 * np.log1p(s) / _LN2
    if np.ndim(snr) == 0:
        return float(c)
    return c


def burst_rate(theta: float, power: float, eps: float) -> float:
    """Rate of a single user bursting over a fraction theta of the time.

    While on, the user spends `eps` per use on processing, so the signal
    power is power/theta - eps and the delivered rate is
    theta * C(power/theta - eps).  theta = 0 is the silent user (rate 0).
    """
    theta = float(theta)
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"burst_rate: theta={theta} outside [0, 1]")
    if theta == 0.0:
        return 0.0
    nu = power / theta - eps
    if nu < -1e-12:
        raise InfeasibleError(
            f"burst_rate: power {power} cannot cover cost {eps} over fraction {theta}"
        )
    return theta * capacity(max(nu, 0.0))


def lambert_w0(x: float) -> float:
    """Principal branch of the Lambert W function, w*exp(w) = x.

    Defined for x >= -1/e.  Halley iteration from a branch-point series
    or a log-based asymptotic guess; stops when the relative step falls
    below 1e-14.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("lambert_w0: x is NaN")
    if x < -_INV_E:
        if x > -_INV_E - 1e-12:
            return -1.0
        raise ValueError(f"lambert_w0: x={x} below -1/e, outside the real domain")
    if x == 0.0:
        return 0.0

    if x < -0.25:
        # Branch-point series in p = sqrt(2(1 + e*x)); exact limit at x = -1/e.
        p = math.sqrt(2.0 * (1.0 + math.e * x))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
        if p < 1e-4:
            return w
    elif x < 3.0:
        w = math.log1p(x) * 0.7
    else:
        lx = math.log(x)
        llx = math.log(lx)
        w = lx - llx + llx / lx

    for _ in range(64):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) <= 1e-14 * max(1.0, abs(w)):
            break
    return w


@dataclass(frozen=True)
class GridSpec:
    """Search box and resolution schedule for maximize_on_grid.

    lower/upper give the box (one entry per dimension), resolution the
    coarse step.  Each refinement round re-scans a box of +/- the previous
    step around the incumbent at `shrink` times the previous resolution.
    A dimension whose span is below the resolution collapses to its
    midpoint.
    """

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    resolution: float = 0.01
    refinements: int = 2
    shrink: float = 0.1

    def __init__(self, lower, upper, resolution=0.01, refinements=2, shrink=0.1):
        lo = tuple(float(v) for v in np.atleast_1d(lower))
        hi = tuple(float(v) for v in np.atleast_1d(upper))
        if len(lo) != len(hi):
            raise ValueError("GridSpec: lower and upper must have the same length")
        if any(h < l for l, h in zip(lo, hi)):
            raise ValueError("GridSpec: upper must be >= lower in every dimension")
        if not resolution > 0.0:
            raise ValueError("GridSpec: resolution must be positive")
        if refinements < 0 or int(refinements) != refinements:
            raise ValueError("GridSpec: refinements must be a non-negative integer")
        if not 0.0 < shrink < 1.0:
            raise ValueError("GridSpec: shrink must lie in (0, 1)")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        object.__setattr__(self, "resolution", float(resolution))
        object.__setattr__(self, "refinements", int(refinements))
        object.__setattr__(self, "shrink", float(shrink))

    @property
    def ndim(self) -> int:
        return len(self.lower)


def _axis(lo: float, hi: float, res: float) -> np.ndarray:
    span = hi - lo
    if span <= 0.0:
        return np.array([lo])
    if span < res:
        return np.array([0.5 * (lo + hi)])
    n = int(math.ceil(span / res - 1e-9))
    return np.linspace(lo, hi, n + 1)


def _scan(objective, axes: Sequence[np.ndarray], vectorized: bool):
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=-1)
    if vectorized:
        vals = np.asarray(objective(pts), dtype=float)
    else:
        vals = np.array([float(objective(p)) for p in pts])
    # C-order ravel of an ij-indexed mesh makes argmax the lexicographically
    # first maximizer: the documented tie-break.
    k = int(np.argmax(vals))
    return pts[k], float(vals[k])


def maximize_on_grid(
    objective: Callable,
    spec: GridSpec,
    *,
    vectorized: bool = False,
) -> tuple[np.ndarray, float]:
    """Deterministic coarse-to-fine grid maximization.

    `objective` maps a point (shape (d,)) to a float, with -inf marking an
    infeasible point.  With vectorized=True it instead maps an (m, d)
    array of points to an (m,) array of values, which is how every scheme
    in this package evaluates its profiles.  Returns (argmax, value); the
    value never falls below the best coarse-grid point.  Raises
    ValueError when no grid point is feasible.
    """
    axes = [_axis(l, h, spec.resolution) for l, h in zip(spec.lower, spec.upper)]
    best_pt, best_val = _scan(objective, axes, vectorized)
    if best_val == -math.inf:
        raise ValueError("maximize_on_grid: no feasible point in the search box")

    res = spec.resolution
    for _ in range(spec.refinements):
        new_res = res * spec.shrink
        axes = [
            _axis(max(l, p - res), min(h, p + res), new_res)
            for l, h, p in zip(spec.lower, spec.upper, best_pt)
        ]
        pt, val = _scan(objective, axes, vectorized)
        if val > best_val:
            best_pt, best_val = pt, val
        res = new_res
    return np.asarray(best_pt, dtype=float), best_val
