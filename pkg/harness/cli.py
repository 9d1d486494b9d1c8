"""
Command-line entry point.

Usage:
    python main.py fig1 [--q0 1 --p0 -1 --K 1 --tau-max 5 --tau-step 0.01]
    python main.py finite-s --s 0.5 --s 0.1 --s 0.02
    python main.py oracle --seed 0 --cases 50
    python main.py lhv-audit --samples 1000000 --chunks 8 --workers 4
    python main.py <command> --config run.yaml --log runs.log

Settings come from explicit flags, then the config file (--config, or
epw.cfg in the working directory), then per-command defaults.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from bell import DeltaLimitParams
from config import ConfigError, _deduplicate_list, _get_run_defaults, OUTPUT_FORMATS
from lhv import McConfig
from numerics import NumericsError
from phase_space import ModePairParams

from .commands import cmd_fig1, cmd_finite_s, cmd_lhv_audit, cmd_oracle
from .constants import (
    AUDIT_DEFAULTS,
    EXIT_IO_OR_NUMERICS,
    EXIT_OK,
    EXIT_USAGE,
    FIG1_DEFAULTS,
    FINITE_S_DEFAULTS,
    ORACLE_DEFAULTS,
    RESULTS_DIR,
    RUN_LOG_PATH,
)
from .log_capture import RunLog
from .scan import ScanSpec


class UsageError(Exception):
    """Bad command line: unknown flag, missing command or an unusable value."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_COMMAND_DEFAULTS = {
    "fig1": FIG1_DEFAULTS,
    "finite-s": FINITE_S_DEFAULTS,
    "oracle": ORACLE_DEFAULTS,
    "lhv-audit": AUDIT_DEFAULTS,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value or YAML file with run settings")
    common.add_argument("--log", type=Path, help="append console output to this file")

    grid = _Parser(add_help=False)
    grid.add_argument("--q0", type=float, help="coherent-state position centre")
    grid.add_argument("--p0", type=float, help="coherent-state momentum centre")
    grid.add_argument("--tau-min", dest="tau_min", type=float)
    grid.add_argument("--tau-max", dest="tau_max", type=float)
    grid.add_argument("--tau-step", dest="tau_step", type=float)
    grid.add_argument("--out", help="output path stem; .csv/.svg are appended")
    grid.add_argument("--format", choices=OUTPUT_FORMATS)

    squeeze = _Parser(add_help=False)
    squeeze.add_argument("--s", type=float, action="append", help="squeezing parameter (repeatable)")

    sampling = _Parser(add_help=False)
    sampling.add_argument("--samples", type=int, help="Monte Carlo samples")
    sampling.add_argument("--seed", type=int)
    sampling.add_argument("--chunks", type=int, help="independent RNG streams the samples are split over")
    sampling.add_argument("--workers", type=int, help="threads running chunks")

    parser = _Parser(prog="main.py", description="Gaussian Wigner sign-correlation experiments")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    fig1 = commands.add_parser("fig1", parents=[common, grid], help="delta-limit S(tau)/K scan")
    fig1.add_argument("--K", type=float, help="normalization constant of the delta-limit state")
    commands.add_parser("finite-s", parents=[common, grid, squeeze], help="normalized finite-s scan")
    oracle = commands.add_parser("oracle", parents=[common, sampling], help="randomized cross-checks")
    oracle.add_argument("--cases", type=int, help="number of closed-form cases")
    commands.add_parser("lhv-audit", parents=[common, grid, squeeze, sampling], help="Monte Carlo S >= 0 audit")
    return parser


def _merge_settings(args: argparse.Namespace) -> dict:
    """Per-command defaults, overridden by the config file, overridden by flags."""
    defaults = _COMMAND_DEFAULTS[args.command]
    settings = dict(defaults)
    settings["out"] = str(RESULTS_DIR / args.command.replace("-", "_"))
    for key, value in _get_run_defaults(args.config).items():
        if key in settings:
            settings[key] = value
    for key in settings:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if "s" in settings:
        settings["s"] = _deduplicate_list(float(v) for v in settings["s"])
    return settings


def _mc_config(settings: dict) -> McConfig:
    try:
        return McConfig(
            n_samples=settings["samples"],
            seed=settings["seed"],
            n_chunks=settings["chunks"],
            max_workers=settings["workers"],
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


def _scan_spec(command: str, settings: dict) -> ScanSpec:
    if command == "fig1":
        params = DeltaLimitParams(settings["q0"], settings["p0"], settings["K"])
        s_values = ()
    else:
        s_values = tuple(settings["s"])
        if not s_values:
            raise UsageError("at least one --s value is required")
        bad = [s for s in s_values if not s > 0]
        if bad:
            raise UsageError(f"s must be > 0, got {bad}")
        params = ModePairParams(settings["q0"], settings["p0"], s_values[0])
    mc = _mc_config(settings) if command == "lhv-audit" else None
    try:
        return ScanSpec(
            tau_min=settings["tau_min"],
            tau_max=settings["tau_max"],
            tau_step=settings["tau_step"],
            params=params,
            output_path=Path(settings["out"]),
            format=settings["format"],
            s_values=s_values,
            mc=mc,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


def _run(args: argparse.Namespace) -> int:
    try:
        settings = _merge_settings(args)
        if args.command == "oracle":
            mc = _mc_config(settings)
            if settings["cases"] < 0:
                raise UsageError(f"--cases must be >= 0, got {settings['cases']}")
            run = lambda: cmd_oracle(mc.seed, settings["cases"], mc.n_samples, mc.n_chunks, mc.max_workers)
        else:
            spec = _scan_spec(args.command, settings)
            command = {"fig1": cmd_fig1, "finite-s": cmd_finite_s, "lhv-audit": cmd_lhv_audit}[args.command]
            run = lambda: command(spec)
    except (UsageError, ConfigError, NumericsError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return run()
    except (OSError, NumericsError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_IO_OR_NUMERICS


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    log_path = args.log or RUN_LOG_PATH
    run_log = RunLog.open(log_path) if log_path else None
    if run_log is not None:
        run_log.start(args.command)
    try:
        return _run(args)
    finally:
        if run_log is not None:
            run_log.stop()
