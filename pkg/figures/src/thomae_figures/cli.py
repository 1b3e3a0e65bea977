"""Batch renderer: CSV samples in, image file out.

    thomae-figures fig1 --input a.csv b.csv c.csv --theta 0.5 1 2 -o fig1.png
    thomae-figures fig2 --input gen.csv --theta 1 -o fig2.png

Inputs are the `x,f` CSVs produced by `thomae sample` / `thomae figure-data`.
Exit codes: 0 success, 1 missing or malformed CSV, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys

from .data import FigureDataError
from .render import render_fig1, render_fig2
from .spec import FigureSpec


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thomae-figures", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("fig1", "fig2"):
        p = sub.add_parser(name)
        p.add_argument("--input", nargs="+", required=True, metavar="CSV")
        p.add_argument("--theta", nargs="+", type=float, required=True)
        p.add_argument("-o", "--output", required=True)
        p.add_argument("--point-size", type=float, default=1.5)
        p.add_argument("--xlim", nargs=2, type=float, default=(0.0, 1.0))
        p.add_argument("--ylim", nargs=2, type=float, default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            input_csv=list(args.input),
            thetas=list(args.theta),
            output=args.output,
            point_size=args.point_size,
            xlim=tuple(args.xlim),
            ylim=tuple(args.ylim) if args.ylim is not None else (0.0, 1.0),
        )
        render = render_fig1 if args.command == "fig1" else render_fig2
        render(spec)
    except FigureDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
