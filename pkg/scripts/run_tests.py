#!/usr/bin/env python
"""Run one marker suite of the polar_gaps tests; extra arguments go to pytest."""
import argparse
import subprocess
import sys
from pathlib import Path
from typing import List

ROOT = Path(__file__).resolve().parents[1]

# coverage and live logging come from pytest.ini
SUITES = {
    "unit": "unit",
    "integration": "integration and not slow",
    "slow": "slow",
    "quick": "not slow",
    "all": None,
}


def pytest_command(suite: str, extra: List[str]) -> List[str]:
    cmd = [sys.executable, "-m", "pytest"]
    marker = SUITES[suite]
    if marker:
        cmd.extend(["-m", marker])
    return cmd + extra


def main() -> int:
    parser = argparse.ArgumentParser(description="Run polar_gaps tests")
    parser.add_argument("suite", nargs="?", choices=sorted(SUITES), default="quick")
    args, extra = parser.parse_known_args()
    return subprocess.run(pytest_command(args.suite, extra), cwd=ROOT).returncode


if __name__ == "__main__":
    sys.exit(main())
