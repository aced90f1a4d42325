#!/usr/bin/env python3
"""Print the parameter table augmented with dimensions and volumes.

Equivalent to `lievol table`; kept as a standalone script for quick
experiment runs and piping into analysis notebooks.

    python scripts/reproduce_table.py --max-rank 8 --format csv > table.csv
"""

import argparse
import sys

from lievol.cli import main as cli_main


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=8)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    args = parser.parse_args()
    return cli_main(["table", "--max-rank", str(args.max_rank), "--format", args.format])


if __name__ == "__main__":
    sys.exit(main())
