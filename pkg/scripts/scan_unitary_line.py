#!/usr/bin/env python3
"""Scan the universal integral along the unitary line alpha + beta = 0.

Writes one CSV row per gamma value with the integral, the Barnes-G closed
form, and their residual; the residual column is the numerical content of
the continuation identity.

    python scripts/scan_unitary_line.py --from 0.25 --to 9 --step 0.25 > scan.csv
"""

import argparse
import sys

from lievol.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=float, default=0.5)
    parser.add_argument("--to", dest="stop", type=float, default=9.0)
    parser.add_argument("--step", type=float, default=0.5)
    args = parser.parse_args()
    return cli_main(
        ["scan", "--from", str(args.start), "--to", str(args.stop), "--step", str(args.step)]
    )


if __name__ == "__main__":
    sys.exit(main())
