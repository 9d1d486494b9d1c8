"""Command-line harness: scans, oracle suite, CSV/SVG output and run logging."""

from .cli import UsageError, build_parser, main
from .commands import cmd_fig1, cmd_finite_s, cmd_lhv_audit, cmd_oracle
from .oracle import ClosedFormCase, MonteCarloCase, OracleReport, run_oracle_suite
from .output import write_csv, write_svg
from .scan import ScanSpec

__all__ = [
    "UsageError",
    "build_parser",
    "main",
    "cmd_fig1",
    "cmd_finite_s",
    "cmd_lhv_audit",
    "cmd_oracle",
    "ClosedFormCase",
    "MonteCarloCase",
    "OracleReport",
    "run_oracle_suite",
    "write_csv",
    "write_svg",
    "ScanSpec",
]
