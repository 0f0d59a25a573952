"""`plot <figure-id> --in FILE.csv --out FILE.png`

Reads a frobound experiment CSV and writes one of the five comparison
figures.  Exit codes: 0 on success, 2 on bad arguments or malformed input.
"""

from __future__ import annotations

import argparse
import sys

from .plots import FIGURE_IDS, render
from .reader import CsvFormatError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="regenerate a bound-comparison figure from an experiment CSV",
    )
    parser.add_argument("figure_id", choices=FIGURE_IDS, metavar="figure-id",
                        help="one of: " + ", ".join(FIGURE_IDS))
    parser.add_argument("--in", dest="csv_path", required=True, metavar="FILE.csv")
    parser.add_argument("--out", dest="out_path", required=True, metavar="FILE.png")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        render(args.figure_id, args.csv_path, args.out_path)
    except (CsvFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
