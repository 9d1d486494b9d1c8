"""Defaults, CSV schemas and exit codes used across the command-line harness."""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO_OR_NUMERICS = 2
EXIT_VALIDATION = 3

# Env (optional)
RESULTS_DIR = Path(os.getenv("EPW_RESULTS_DIR", "results"))
RUN_LOG_PATH = os.getenv("EPW_RUN_LOG") or None

# CSV headers are part of the output contract
FIG1_COLUMNS = ["tau", "F", "F3", "S"]
FINITE_S_COLUMNS = ["s", "tau", "F_fin", "S_fin", "K_eff"]
AUDIT_COLUMNS = ["s", "tau", "S_mc", "S_mc_se", "mc_flag", "S_quad", "quad_flag"]
CSV_FLOAT_FORMAT = "%.12g"

# fig1: delta-limit scan of the coherent state centred at (1, -1)
FIG1_DEFAULTS = {
    "q0": 1.0,
    "p0": -1.0,
    "K": 1.0,
    "tau_min": 0.0,
    "tau_max": 5.0,
    "tau_step": 0.01,
    "format": "both",
}

FINITE_S_DEFAULTS = {
    "q0": 1.0,
    "p0": -1.0,
    "s": [0.1],
    "tau_min": 0.0,
    "tau_max": 10.0,
    "tau_step": 0.25,
    "format": "both",
}

AUDIT_DEFAULTS = {
    "q0": 1.0,
    "p0": -1.0,
    "s": [0.5, 0.1, 0.02],
    "tau_min": 0.0,
    "tau_max": 10.0,
    "tau_step": 0.25,
    "samples": 1_000_000,
    "seed": 0,
    "chunks": 8,
    "workers": 1,
    "format": "csv",
}

ORACLE_DEFAULTS = {
    "seed": 0,
    "cases": 50,
    "samples": 1_000_000,
    "chunks": 8,
    "workers": 1,
}

# Quadrature S below this counts as a violation in the audit
QUAD_FLAG_THRESHOLD = -1e-6
# Oracle tolerances
CLOSED_FORM_REL_TOL = 1e-8
MC_SIGMAS = 4.0
MC_ORACLE_CASES = 20

BANNER = "=" * 60
