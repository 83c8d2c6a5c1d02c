"""Parameter sweeps, figure presets, and CSV emission.

A sweep evaluates a selection of schemes at every value of one swept
channel parameter and yields rows of rates plus the interference-free
upper bound.  Presets pin the channel families behind the package's
reference figures (tags fig4 through fig10).  Output is comma-separated
text: header row, 6 significant digits, and the sentinel "NA" for a
scheme outside its regime at that row.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .cgzic import (
    CgzicChannel,
    cgzic_scheme_i,
    cgzic_scheme_ii_tdm,
    cgzic_scheme_iii,
    cgzic_scheme_iv,
    upper_bound_cgzic,
)
from .cgzic import _profile_box as _cgzic_box
from .hk_two_user import TwoUserChannel
from .numerics import GridSpec, RegimeError
from .schemes_two_user import (
    normalized_sum_rate,
    scheme_i,
    scheme_ii_tdm,
    scheme_iii,
    scheme_iv,
    upper_bound_two_user,
)
from .schemes_two_user import _overlap_box as _two_user_box
from .single_user import UserBudget, interference_free_rate, optimal_burstiness
from .very_strong import AsymptoticBudget, asymptotic_thresholds, very_strong_thresholds

SCHEME_ORDER = ("I", "II", "III", "IV")

FIGURE_TAGS = ("fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10")

_SANDWICH_TOL = 1e-6

_TWO_USER_PARAMS = ("a", "b", "p1", "p2", "eps1", "eps2", "eps")
_CGZIC_PARAMS = ("a1", "a2", "p1", "p2", "p3", "eps1", "eps2", "eps3", "eps")


class InvariantViolation(RuntimeError):
    """A computed rate exceeded the interference-free upper bound."""


@dataclass(frozen=True)
class SweepRow:
    """One sweep point: ordered (column, value) cells; None prints as NA."""

    cells: tuple[tuple[str, float | None], ...]

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.cells)

    def value(self, name: str) -> float | None:
        for k, v in self.cells:
            if k == name:
                return v
        raise KeyError(name)


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: model, parameter, range, fixed channel, schemes."""

    model: str
    param: str
    start: float
    stop: float
    step: float
    fixed: dict = field(default_factory=dict)
    schemes: tuple[str, ...] = SCHEME_ORDER
    include_argmax: bool = False
    grid_res: float | None = None
    refinements: int | None = None

    def __post_init__(self):
        if self.model not in ("two-user", "cgzic"):
            raise ValueError(f"SweepSpec: unknown model {self.model!r}")
        allowed = _TWO_USER_PARAMS if self.model == "two-user" else _CGZIC_PARAMS
        if self.param not in allowed:
            raise ValueError(
                f"SweepSpec: cannot sweep {self.param!r} on {self.model}; "
                f"choose one of {', '.join(allowed)}"
            )
        if not self.step > 0.0:
            raise ValueError(f"SweepSpec: step must be > 0, got {self.step}")
        if self.stop < self.start:
            raise ValueError(f"SweepSpec: stop {self.stop} below start {self.start}")
        bad = [s for s in self.schemes if s not in SCHEME_ORDER]
        if bad:
            raise ValueError(f"SweepSpec: unknown scheme labels {bad}")
        object.__setattr__(
            self, "schemes", tuple(s for s in SCHEME_ORDER if s in self.schemes)
        )

    def values(self) -> tuple[float, ...]:
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return tuple(self.start + k * self.step for k in range(n))

    def channel_at(self, value: float):
        params = dict(self.fixed)
        if self.param == "eps":
            if self.model == "two-user":
                params["eps1"] = params["eps2"] = value
            else:
                params["eps1"] = params["eps2"] = params["eps3"] = value
        else:
            params[self.param] = value
        if self.model == "two-user":
            return TwoUserChannel(**params)
        return CgzicChannel(**params)


def _box_grid(box, default_res: float, spec: SweepSpec) -> GridSpec | None:
    """Profile-search grid honoring the spec's resolution overrides."""
    if spec.grid_res is None and spec.refinements is None:
        return None
    lo, hi = box
    res = spec.grid_res if spec.grid_res is not None else default_res
    ref = spec.refinements if spec.refinements is not None else 2
    return GridSpec(lo, hi, resolution=res, refinements=ref)


def _two_user_results(ch: TwoUserChannel, spec: SweepSpec) -> dict:
    box = (_two_user_box(ch), (1.0, 1.0))
    out = {}
    for s in spec.schemes:
        try:
            if s == "I":
                out[s] = scheme_i(ch)
            elif s == "II":
                out[s] = scheme_ii_tdm(ch)
            elif s == "III":
                out[s] = scheme_iii(ch, grid=_box_grid(box, 0.01, spec))
            else:
                out[s] = scheme_iv(ch, grid=_box_grid(box, 0.01, spec))
        except RegimeError:
            out[s] = None
    return out


def _cgzic_results(ch: CgzicChannel, spec: SweepSpec) -> dict:
    box = _cgzic_box(ch)
    out = {}
    for s in spec.schemes:
        try:
            if s == "I":
                out[s] = cgzic_scheme_i(ch)
            elif s == "II":
                out[s] = cgzic_scheme_ii_tdm(ch)
            elif s == "III":
                out[s] = cgzic_scheme_iii(ch, grid=_box_grid(box, 0.02, spec))
            else:
                out[s] = cgzic_scheme_iv(ch, grid=_box_grid(box, 0.02, spec))
        except RegimeError:
            out[s] = None
    return out


def _best_profile(results: dict) -> tuple | None:
    best = None
    for s in SCHEME_ORDER:
        r = results.get(s)
        if r is not None and (best is None or r.rate > best.rate):
            best = r
    return None if best is None else best.profile


def _check_sandwich(param: str, value: float, results: dict, ub: float) -> None:
    for s, r in results.items():
        if r is not None and r.rate > ub + _SANDWICH_TOL:
            raise InvariantViolation(
                f"scheme {s} rate {r.rate:.9g} exceeds upper bound {ub:.9g} "
                f"at {param}={value:.6g}"
            )


def run_sweep(spec: SweepSpec) -> Iterator[SweepRow]:
    """Evaluate the sweep; rows in sweep order, deterministic given spec.

    The whole value range is validated against the channel invariants
    before the first row is produced, so bad fixed parameters fail fast
    rather than midway through a file.
    """
    channels = [spec.channel_at(v) for v in spec.values()]
    return _sweep_rows(spec, channels)


def _sweep_rows(spec: SweepSpec, channels) -> Iterator[SweepRow]:
    for value, ch in zip(spec.values(), channels):
        if spec.model == "two-user":
            results = _two_user_results(ch, spec)
            ub = upper_bound_two_user(ch)
        else:
            results = _cgzic_results(ch, spec)
            ub = upper_bound_cgzic(ch)
        _check_sandwich(spec.param, value, results, ub)
        cells = [(spec.param, value)]
        for s in spec.schemes:
            r = results[s]
            cells.append((f"R_{s}", None if r is None else r.rate))
        cells.append(("R_ub", ub))
        if spec.include_argmax:
            profile = _best_profile(results)
            names = ("theta1", "theta2") if spec.model == "two-user" else (
                "theta1", "theta2", "theta3"
            )
            for i, name in enumerate(names):
                cells.append((name, None if profile is None else profile[i]))
            if spec.model == "two-user":
                ri = results.get("I")
                split = None if ri is None else ri.extra["split"]
                cells.append(("tau1", None if split is None else split.tau1))
                cells.append(("tau2", None if split is None else split.tau2))
        yield SweepRow(tuple(cells))


def query_thresholds(ch: TwoUserChannel, mode: str) -> tuple[float, float]:
    """Very-strong-regime boundary gains, exact or small-budget asymptotic."""
    if mode == "exact":
        return very_strong_thresholds(ch)
    if mode == "asymptotic":
        budget = AsymptoticBudget.from_powers(ch.p1, ch.p2, ch.eps1, ch.eps2)
        return asymptotic_thresholds(budget)
    raise ValueError(f"query_thresholds: mode must be 'exact' or 'asymptotic', got {mode!r}")


def _fig_two_user_spec(tag: str) -> SweepSpec:
    if tag == "fig4":
        return SweepSpec(
            "two-user", "a", 1.0, 6.0, 0.05,
            fixed={"b": 3.0, "p1": 3.5, "p2": 3.5, "eps1": 2.0, "eps2": 2.0},
        )
    if tag == "fig5":
        return SweepSpec(
            "two-user", "eps", 0.0, 3.5, 0.05,
            fixed={"a": 3.0, "b": 3.0, "p1": 3.5, "p2": 3.5},
        )
    # fig6: one-sided weak interference, decoding scheme IV undefined
    return SweepSpec(
        "two-user", "a", 0.01, 0.99, 0.01,
        fixed={"b": 0.0, "p1": 3.5, "p2": 3.5, "eps1": 2.0, "eps2": 2.0},
        schemes=("I", "II", "III"),
    )


def _ratio_rows(tag: str) -> Iterator[SweepRow]:
    """Best-scheme-to-upper-bound ratio at cost 2 and at cost 0 (fig7/fig10)."""
    if tag == "fig7":
        values = SweepSpec("two-user", "a", 1.0, 6.0, 0.05, fixed={}).values()
    else:
        values = SweepSpec("cgzic", "a1", 1.0, 6.0, 0.05, fixed={}).values()
    for v in values:
        cells = [("a" if tag == "fig7" else "a1", v)]
        for label, eps in (("ratio_eps2", 2.0), ("ratio_eps0", 0.0)):
            if tag == "fig7":
                ch = TwoUserChannel(v, 3.0, 3.5, 3.5, eps, eps)
                spec = SweepSpec("two-user", "a", v, v, 1.0, fixed={})
                results = _two_user_results(ch, spec)
                ub = upper_bound_two_user(ch)
            else:
                ch = CgzicChannel(v, 0.5, 4.0, 3.5, 3.0, eps, eps, eps)
                spec = SweepSpec("cgzic", "a1", v, v, 1.0, fixed={})
                results = _cgzic_results(ch, spec)
                ub = upper_bound_cgzic(ch)
            _check_sandwich(cells[0][0], v, results, ub)
            best = max(r.rate for r in results.values() if r is not None)
            cells.append((label, normalized_sum_rate(best, ub)))
        yield SweepRow(tuple(cells))


def _fig9_rows() -> Iterator[SweepRow]:
    """Argmax burst fractions of the cascade decoding scheme (fig9)."""
    spec = SweepSpec(
        "cgzic", "a1", 1.0, 6.0, 0.05,
        fixed={"a2": 0.5, "p1": 4.0, "p2": 3.5, "p3": 3.0,
               "eps1": 2.0, "eps2": 2.0, "eps3": 2.0},
        schemes=("IV",),
    )
    for value in spec.values():
        r = cgzic_scheme_iv(spec.channel_at(value))
        yield SweepRow(
            (
                ("a1", value),
                ("theta1", r.profile[0]),
                ("theta2", r.profile[1]),
                ("theta3", r.profile[2]),
            )
        )


def reproduce_figure(tag: str) -> Iterator[SweepRow]:
    """Preset sweep behind one reference figure tag (fig4..fig10)."""
    if tag not in FIGURE_TAGS:
        raise ValueError(f"reproduce_figure: unknown tag {tag!r}; choose from {FIGURE_TAGS}")
    if tag in ("fig4", "fig5", "fig6"):
        return run_sweep(_fig_two_user_spec(tag))
    if tag in ("fig7", "fig10"):
        return _ratio_rows(tag)
    if tag == "fig8":
        return run_sweep(
            SweepSpec(
                "cgzic", "a1", 1.0, 6.0, 0.05,
                fixed={"a2": 0.5, "p1": 4.0, "p2": 3.5, "p3": 3.0,
                       "eps1": 2.0, "eps2": 2.0, "eps3": 2.0},
            )
        )
    return _fig9_rows()


def format_cell(value: float | None) -> str:
    return "NA" if value is None else "%.6g" % value


def write_csv(rows: Iterable[SweepRow], stream: TextIO) -> int:
    """Emit rows as CSV with a header; returns the number of data rows."""
    writer = csv.writer(stream)
    count = 0
    header: tuple[str, ...] | None = None
    for row in rows:
        if header is None:
            header = row.columns
            writer.writerow(header)
        elif row.columns != header:
            raise ValueError("write_csv: inconsistent columns across rows")
        writer.writerow([format_cell(v) for _, v in row.cells])
        count += 1
    if header is None:
        raise ValueError("write_csv: sweep produced no rows")
    return count


def single_user_rows(power: float, eps: float) -> Iterator[SweepRow]:
    """One row describing a single user's optimal burst operating point."""
    budget = UserBudget(power, eps)
    theta, nu = optimal_burstiness(budget)
    yield SweepRow(
        (
            ("p", power),
            ("eps", eps),
            ("theta_star", theta),
            ("nu_star", nu),
            ("rate", interference_free_rate(budget)),
        )
    )
