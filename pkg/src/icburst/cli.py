"""Command-line front end: sweeps, figure presets, and threshold queries.

Subcommands:

* ``icburst single-user`` - optimal burstiness of one user, optionally
  swept over its power or cost.
* ``icburst two-user sweep`` - scheme rates across one swept parameter.
* ``icburst two-user thresholds`` - very strong interference boundary.
* ``icburst cgzic sweep`` - cascade Z channel scheme rates.
* ``icburst reproduce --figure <tag>`` - preset sweeps fig4..fig10.

All numeric flags may instead come from a ``key=value`` configuration
file (``--config``); explicit flags win.  Output is CSV to stdout or to
``--out``.  Exit codes: 0 success, 2 invalid arguments, 3 regime error
on a scalar query, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator

from .hk_two_user import TwoUserChannel
from .numerics import InfeasibleError, RegimeError
from .sweeps import (
    FIGURE_TAGS,
    InvariantViolation,
    SweepRow,
    SweepSpec,
    query_thresholds,
    reproduce_figure,
    run_sweep,
    single_user_rows,
    write_csv,
)

_TWO_USER_FLAGS = ("a", "b", "p1", "p2", "eps1", "eps2")
_CGZIC_FLAGS = ("a1", "a2", "p1", "p2", "p3", "eps1", "eps2", "eps3")


def load_config(path: str) -> dict[str, str]:
    """Read key=value lines; '#' starts a comment, blank lines ignored."""
    out: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def _parse_range(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"--range must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"--range must be numeric start:stop:step, got {text!r}") from None
    return start, stop, step


def _parse_bool(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "on")


def _parse_schemes(text: str) -> tuple[str, ...]:
    labels = tuple(s.strip().upper() for s in text.split(",") if s.strip())
    if not labels:
        raise ValueError("--schemes: empty selection")
    return labels


class _Settings:
    """Merged view of command-line flags over configuration-file values."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.cfg = load_config(args.config) if getattr(args, "config", None) else {}

    def get(self, key: str, cast=float, default=None):
        value = getattr(self.args, key.replace("-", "_"), None)
        if value is not None:
            return value
        if key in self.cfg:
            try:
                return cast(self.cfg[key])
            except ValueError as exc:
                raise ValueError(f"config key {key!r}: {exc}") from None
        return default

    def require(self, keys, skip=()) -> dict[str, float]:
        out = {}
        missing = []
        for key in keys:
            if key in skip:
                continue
            value = self.get(key)
            if value is None:
                missing.append(f"--{key}")
            else:
                out[key] = value
        if missing:
            raise ValueError(f"missing required parameters: {', '.join(missing)}")
        return out


def _emit(rows: Iterator[SweepRow], out: str) -> None:
    if out in ("stdout", "-"):
        write_csv(rows, sys.stdout)
        return
    with open(out, "w", newline="", encoding="utf-8") as fh:
        write_csv(rows, fh)


def _sweep_plan(settings: _Settings) -> tuple[str, tuple[float, float, float]]:
    param = settings.get("sweep", cast=str)
    rng = settings.get("range", cast=str)
    if param is None or rng is None:
        raise ValueError("a sweep needs both --sweep <param> and --range start:stop:step")
    return param, _parse_range(rng)


def _cmd_single_user(args: argparse.Namespace) -> None:
    settings = _Settings(args)
    sweep = settings.get("sweep", cast=str)
    if sweep is None:
        fixed = settings.require(("p1", "eps1"))
        rows = single_user_rows(fixed["p1"], fixed["eps1"])
    else:
        sweep = {"p1": "p", "eps1": "eps"}.get(sweep, sweep)
        if sweep not in ("p", "eps"):
            raise ValueError(f"single-user: can only sweep p or eps, got {sweep!r}")
        rng = settings.get("range", cast=str)
        if rng is None:
            raise ValueError("a sweep needs --range start:stop:step")
        start, stop, step = _parse_range(rng)
        values = SweepSpec("two-user", "a", start, stop, step, fixed={}).values()
        fixed = settings.require(("p1", "eps1"), skip=(("p1",) if sweep == "p" else ("eps1",)))

        def rows_gen() -> Iterator[SweepRow]:
            for v in values:
                power = v if sweep == "p" else fixed["p1"]
                eps = v if sweep == "eps" else fixed["eps1"]
                yield from single_user_rows(power, eps)

        rows = rows_gen()
    _emit(rows, settings.get("out", cast=str, default="stdout"))


def _make_sweep_spec(settings: _Settings, model: str, flags) -> SweepSpec:
    param, (start, stop, step) = _sweep_plan(settings)
    skip = ("eps1", "eps2", "eps3") if param == "eps" else (param,)
    fixed = settings.require(flags, skip=skip)
    schemes = settings.get("schemes", cast=str)
    return SweepSpec(
        model,
        param,
        start,
        stop,
        step,
        fixed=fixed,
        schemes=_parse_schemes(schemes) if schemes is not None else ("I", "II", "III", "IV"),
        include_argmax=bool(settings.get("argmax", cast=_parse_bool, default=False)),
        grid_res=settings.get("grid-res"),
        refinements=settings.get("refinements", cast=int),
    )


def _cmd_two_user_sweep(args: argparse.Namespace) -> None:
    settings = _Settings(args)
    spec = _make_sweep_spec(settings, "two-user", _TWO_USER_FLAGS)
    _emit(run_sweep(spec), settings.get("out", cast=str, default="stdout"))


def _cmd_two_user_thresholds(args: argparse.Namespace) -> None:
    settings = _Settings(args)
    fixed = settings.require(("p1", "p2", "eps1", "eps2"))
    mode = settings.get("mode", cast=str, default="exact")
    ch = TwoUserChannel(0.0, 0.0, fixed["p1"], fixed["p2"], fixed["eps1"], fixed["eps2"])
    a_min, b_min = query_thresholds(ch, mode)
    row = SweepRow(
        (
            ("a_min", a_min),
            ("b_min", b_min),
            ("classical_a", 1.0 + fixed["p1"]),
            ("classical_b", 1.0 + fixed["p2"]),
        )
    )
    _emit(iter([row]), settings.get("out", cast=str, default="stdout"))


def _cmd_cgzic_sweep(args: argparse.Namespace) -> None:
    settings = _Settings(args)
    spec = _make_sweep_spec(settings, "cgzic", _CGZIC_FLAGS)
    _emit(run_sweep(spec), settings.get("out", cast=str, default="stdout"))


def _cmd_reproduce(args: argparse.Namespace) -> None:
    settings = _Settings(args)
    tag = settings.get("figure", cast=str)
    if tag is None:
        raise ValueError("reproduce needs --figure <tag>")
    _emit(reproduce_figure(tag), settings.get("out", cast=str, default="stdout"))


def _channel_parent(flags) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    for flag in flags:
        parent.add_argument(f"--{flag}", type=float, default=None)
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path, or 'stdout' (default)")
    common.add_argument("--config", default=None, help="key=value file; flags override it")

    sweep_opts = argparse.ArgumentParser(add_help=False)
    sweep_opts.add_argument("--sweep", default=None, metavar="PARAM")
    sweep_opts.add_argument("--range", default=None, metavar="START:STOP:STEP")
    sweep_opts.add_argument("--schemes", default=None, metavar="LIST",
                            help="comma-separated subset of I,II,III,IV")
    sweep_opts.add_argument("--grid-res", type=float, default=None,
                            help="profile grid resolution for schemes III/IV")
    sweep_opts.add_argument("--refinements", type=int, default=None,
                            help="grid refinement rounds for schemes III/IV")
    sweep_opts.add_argument("--argmax", action="store_true", default=None,
                            help="append best-scheme profile columns")

    parser = argparse.ArgumentParser(
        prog="icburst",
        description="Sum rates and burst schedules of interference channels "
        "under per-use processing energy cost.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_single = sub.add_parser(
        "single-user", parents=[common, _channel_parent(("p1", "eps1"))],
        help="optimal burstiness of one user",
    )
    p_single.add_argument("--sweep", default=None, choices=["p", "eps", "p1", "eps1"])
    p_single.add_argument("--range", default=None, metavar="START:STOP:STEP")
    p_single.set_defaults(func=_cmd_single_user)

    p_two = sub.add_parser("two-user", help="two-user interference channel")
    two_sub = p_two.add_subparsers(dest="subcommand", required=True)
    p_two_sweep = two_sub.add_parser(
        "sweep", parents=[common, _channel_parent(_TWO_USER_FLAGS), sweep_opts],
        help="scheme rates across one swept parameter",
    )
    p_two_sweep.set_defaults(func=_cmd_two_user_sweep)
    p_two_thr = two_sub.add_parser(
        "thresholds", parents=[common, _channel_parent(("p1", "p2", "eps1", "eps2"))],
        help="very strong interference boundary gains",
    )
    p_two_thr.add_argument("--mode", choices=["exact", "asymptotic"], default=None)
    p_two_thr.set_defaults(func=_cmd_two_user_thresholds)

    p_cg = sub.add_parser("cgzic", help="three-user cascade Z channel")
    cg_sub = p_cg.add_subparsers(dest="subcommand", required=True)
    p_cg_sweep = cg_sub.add_parser(
        "sweep", parents=[common, _channel_parent(_CGZIC_FLAGS), sweep_opts],
        help="scheme rates across one swept parameter",
    )
    p_cg_sweep.set_defaults(func=_cmd_cgzic_sweep)

    p_fig = sub.add_parser(
        "reproduce", parents=[common], help="preset figure sweeps",
    )
    p_fig.add_argument("--figure", choices=list(FIGURE_TAGS), default=None)
    p_fig.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except InvariantViolation as exc:
        print(f"icburst: invariant violation: {exc}", file=sys.stderr)
        return 4
    except RegimeError as exc:
        print(f"icburst: {exc}", file=sys.stderr)
        return 3
    except (ValueError, InfeasibleError, OSError) as exc:
        print(f"icburst: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
