#!/usr/bin/env python3
"""
glyphplot
Command-line entry point: python main.py --data d.csv --spec s.json --out plot.svg
"""

import sys

from cli.runner import main

if __name__ == "__main__":
    sys.exit(main())
