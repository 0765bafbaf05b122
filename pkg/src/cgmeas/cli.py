"""Command-line interface: parameter sweeps to CSV, plus the validation runner.

Subcommands
    prob-initial   outcome probabilities vs p at theta = 0
    prob-time      outcome probabilities vs theta or time
    negativity     system-apparatus negativity vs theta
    coherences     effective-state coherence moduli vs theta
    validate       run the self-check suite (exit 1 on any failure)

Every run writes CSV with '#' header comments echoing each parameter at
full precision, so identical invocations produce byte-identical files.
An optional JSON config file mirrors the flags; explicit flags win.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from .errors import ScaleError
from .params import ModelParams
from .sweeps import (
    COHERENCE_NAMES,
    PROB_NAMES,
    SweepResult,
    SweepSpec,
    sweep_coherences,
    sweep_initial_probabilities,
    sweep_negativity,
    sweep_time_probabilities,
)
from .validation import run_validation

DATA_COMMANDS = ("prob-initial", "prob-time", "negativity", "coherences")


def _fmt(value, digits: int = 17) -> str:
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", default=None, help="JSON file mirroring the flags")
    sub.add_argument("--n", default=None, help="comma-separated apparatus sizes")
    sub.add_argument("--c0", type=float, default=1.0 / math.sqrt(2.0),
                     help="modulus of the system amplitude c0")
    sub.add_argument("--c0-phase", type=float, default=0.0, help="phase of c0 (rad)")
    sub.add_argument("--c1", type=float, default=None,
                     help="modulus of c1; defaults to sqrt(1 - c0^2)")
    sub.add_argument("--c1-phase", type=float, default=0.0, help="phase of c1 (rad)")
    sub.add_argument("--p", type=float, default=0.5, help="constituent |0> weight")
    sub.add_argument("--phi", type=float, default=math.pi / 2,
                     help="constituent phase (rad)")
    sub.add_argument("--omega", type=float, default=1.0, help="coupling frequency")
    sub.add_argument("--digits", type=int, default=17, help="CSV float precision")
    sub.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")


def _add_theta_grid(sub: argparse.ArgumentParser, default_max: float) -> None:
    sub.add_argument("--theta-steps", type=int, default=256,
                     help="number of grid points")
    sub.add_argument("--theta-max", type=float, default=default_max,
                     help="largest theta on the grid (rad)")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="cgmeas",
        description="Coarse-grained quantum measurement sweeps",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    by_name = {}

    sp = by_name["prob-initial"] = subs.add_parser(
        "prob-initial", help="probabilities vs p before interaction")
    _add_common(sp)
    sp.add_argument("--p-steps", type=int, default=101)
    sp.add_argument("--p-min", type=float, default=0.0)
    sp.add_argument("--p-max", type=float, default=1.0)
    sp.set_defaults(default_n="9,33,99")

    sp = by_name["prob-time"] = subs.add_parser(
        "prob-time", help="probabilities vs theta or time")
    _add_common(sp)
    _add_theta_grid(sp, default_max=4.0 * math.pi)
    sp.add_argument("--t-max", type=float, default=None,
                    help="sweep time instead of theta (t = N*theta/omega)")
    sp.set_defaults(default_n="50")

    sp = by_name["negativity"] = subs.add_parser("negativity", help="negativity vs theta")
    _add_common(sp)
    _add_theta_grid(sp, default_max=2.0 * math.pi)
    sp.set_defaults(default_n="4,6,12,24,48")

    sp = by_name["coherences"] = subs.add_parser(
        "coherences", help="coherence moduli vs theta")
    _add_common(sp)
    _add_theta_grid(sp, default_max=2.0 * math.pi)
    sp.set_defaults(default_n="4,6,12,24,48")

    by_name["validate"] = subs.add_parser("validate", help="run the self-check suite")
    return parser, by_name


def _apply_config(parser: argparse.ArgumentParser,
                  subparsers: dict[str, argparse.ArgumentParser],
                  argv: list[str]) -> argparse.Namespace:
    """Parse twice so JSON config values act as defaults under explicit flags."""
    args = parser.parse_args(argv)
    config_path = getattr(args, "config", None)
    if not config_path:
        return args
    try:
        with open(config_path) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        parser.error(f"cannot read config {config_path}: {err}")
    if not isinstance(config, dict):
        parser.error(f"config {config_path} must hold a JSON object")
    sub = subparsers[args.command]
    known = {a.dest for a in sub._actions}
    overrides = {}
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest not in known:
            parser.error(f"config {config_path}: unknown key {key!r}")
        overrides[dest] = value
    sub.set_defaults(**overrides)
    return parser.parse_args(argv)


def _parse_n_list(args, parser) -> tuple[int, ...]:
    raw = args.n if args.n is not None else args.default_n
    try:
        values = tuple(int(tok) for tok in str(raw).split(",") if tok.strip())
    except ValueError:
        parser.error(f"--n must be comma-separated integers, got {raw!r}")
    if not values or any(v < 1 for v in values):
        parser.error(f"--n entries must be positive integers, got {raw!r}")
    return values


def _parse_amplitudes(args, parser) -> tuple[complex, complex]:
    if abs(args.c0) > 1.0:
        parser.error(f"|c0| = {args.c0} exceeds 1")
    c0 = args.c0 * cmath.exp(1j * args.c0_phase)
    if args.c1 is None:
        c1_mod = math.sqrt(max(0.0, 1.0 - args.c0 ** 2))
    else:
        c1_mod = args.c1
    c1 = c1_mod * cmath.exp(1j * args.c1_phase)
    if abs(abs(c0) ** 2 + abs(c1) ** 2 - 1.0) > 1e-9:
        parser.error(f"|c0|^2 + |c1|^2 = {abs(c0)**2 + abs(c1)**2:.12g} must be 1")
    return c0, c1


def _base_params(args, parser, n: int) -> ModelParams:
    c0, c1 = _parse_amplitudes(args, parser)
    if not 0.0 <= args.p <= 1.0:
        parser.error(f"p = {args.p} outside [0, 1]")
    if args.omega == 0.0:
        parser.error("omega must be nonzero")
    if getattr(args, "theta_steps", 1) < 1:
        parser.error("--theta-steps must be a positive integer")
    return ModelParams(c0=c0, c1=c1, p=args.p, phi=args.phi, N=n,
                       omega=args.omega, theta=0.0)


def _header_lines(args, command: str) -> list[str]:
    skip = {"command", "default_n", "config", "out", "func"}
    lines = [f"# command={command}"]
    for key in sorted(vars(args)):
        if key in skip:
            continue
        value = getattr(args, key)
        if key == "n" and value is None:
            value = args.default_n
        lines.append(f"# {key}={_fmt(value)}")
    return lines


def _grid(args) -> tuple[str, tuple[float, ...]]:
    if getattr(args, "t_max", None) is not None:
        steps = args.theta_steps
        return "time", tuple(args.t_max * i / (steps - 1) if steps > 1 else 0.0
                             for i in range(steps))
    steps = args.theta_steps
    return "theta", tuple(args.theta_max * i / (steps - 1) if steps > 1 else 0.0
                          for i in range(steps))


def _pivot_probabilities(result: SweepResult) -> list[tuple]:
    rows = []
    for i in range(0, len(result.rows), 3):
        triplet = result.rows[i:i + 3]
        value, n = triplet[0][0], triplet[0][1]
        by_name = {name: obs for _, _, name, obs in triplet}
        rows.append((value, n, *(by_name[name] for name in PROB_NAMES)))
    return rows


def _pivot_coherences(result: SweepResult, omega: float) -> list[tuple]:
    rows = []
    for i in range(0, len(result.rows), 3):
        triplet = result.rows[i:i + 3]
        theta, n = triplet[0][0], triplet[0][1]
        by_name = {name: obs for _, _, name, obs in triplet}
        rows.append((theta, n * theta / omega, n,
                     *(by_name[name] for name in COHERENCE_NAMES)))
    return rows


def _write_csv(path: str, header_comments: list[str], columns: tuple[str, ...],
               rows: list[tuple], digits: int) -> None:
    lines = list(header_comments)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(v, digits) for v in row))
    text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _run_data_command(args, parser) -> int:
    n_list = _parse_n_list(args, parser)
    base = _base_params(args, parser, n_list[0])
    command = args.command

    try:
        if command == "prob-initial":
            if args.p_steps < 1 or not 0.0 <= args.p_min < args.p_max <= 1.0:
                parser.error("invalid p grid")
            grid = tuple(
                args.p_min + (args.p_max - args.p_min) * i / (args.p_steps - 1)
                if args.p_steps > 1 else args.p_min
                for i in range(args.p_steps)
            )
            spec = SweepSpec("p", grid, base, n_list)
            result = sweep_initial_probabilities(spec)
            rows = _pivot_probabilities(result)
            columns = ("sweep_value", "N") + PROB_NAMES
        elif command == "prob-time":
            variable, grid = _grid(args)
            spec = SweepSpec(variable, grid, base, n_list)
            result = sweep_time_probabilities(spec)
            rows = _pivot_probabilities(result)
            columns = ("sweep_value", "N") + PROB_NAMES
        elif command == "negativity":
            variable, grid = _grid(args)
            spec = SweepSpec(variable, grid, base, n_list)
            result = sweep_negativity(spec)
            rows = [(theta, n * theta / args.omega, n, obs)
                    for theta, n, _, obs in result.rows]
            columns = ("theta", "t", "N", "negativity")
        else:  # coherences
            variable, grid = _grid(args)
            spec = SweepSpec(variable, grid, base, n_list)
            result = sweep_coherences(spec)
            rows = _pivot_coherences(result, args.omega)
            columns = ("theta", "t", "N") + COHERENCE_NAMES
    except ScaleError as err:
        parser.error(str(err))

    header = _header_lines(args, command)
    header.append(f"# sweep_variable={'p' if command == 'prob-initial' else spec.variable}")
    _write_csv(args.out, header, columns, rows, args.digits)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser, subparsers = build_parser()
    args = _apply_config(parser, subparsers, list(sys.argv[1:] if argv is None else argv))
    if args.command == "validate":
        report = run_validation()
        for line in report.lines():
            print(line)
        return 0 if report.passed else 1
    return _run_data_command(args, parser)


if __name__ == "__main__":
    sys.exit(main())
