#!/usr/bin/env python3
"""
Gaussian Wigner sign-correlation experiments - entry point.
Command logic lives in the harness/ package (constants, scan, output, log_capture, oracle, commands, cli).
"""

import sys

from harness.cli import main

if __name__ == "__main__":
    sys.exit(main())
