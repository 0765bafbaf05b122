"""cgfigs: build the standard figures from cgmeas CSV files."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .csvdata import CsvFormatError
from .render import coherence_figure, negativity_figure, probability_figure


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cgfigs",
                                     description="Render cgmeas sweep CSVs")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("probabilities", help="probability panels (vs p and vs time)")
    sp.add_argument("--initial", default=None, help="prob-initial CSV (Pr(0) vs p)")
    sp.add_argument("--time", nargs="*", default=[], help="prob-time CSVs")
    sp.add_argument("--out", required=True, help="output base path (.png/.svg added)")

    sp = subs.add_parser("negativity", help="negativity overlays, one panel per CSV")
    sp.add_argument("csvs", nargs="+")
    sp.add_argument("--out", required=True)

    sp = subs.add_parser("coherences", help="coherence grid, one row per entry")
    sp.add_argument("csvs", nargs="+")
    sp.add_argument("--out", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "probabilities":
            if args.initial is None and not args.time:
                parser.error("need --initial and/or --time CSVs")
            written = probability_figure(args.initial,
                                         [Path(p) for p in args.time],
                                         Path(args.out))
        elif args.command == "negativity":
            written = negativity_figure([Path(p) for p in args.csvs], Path(args.out))
        else:
            written = coherence_figure([Path(p) for p in args.csvs], Path(args.out))
    except (CsvFormatError, OSError, ValueError) as err:
        print(f"cgfigs: {err}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
