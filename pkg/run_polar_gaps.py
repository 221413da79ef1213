#!/usr/bin/env python
"""Launcher for the polar_gaps command line from a source checkout."""

import sys

from polar_gaps.src.main import main

if __name__ == "__main__":
    sys.exit(main())
