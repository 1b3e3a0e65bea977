"""Command-line surface: every library operation, emitting CSV or JSON.

Exit codes: 0 success, 2 bad arguments, 3 insufficient precision.  Output is
deterministic for fixed arguments (no timestamps), so runs are scriptable
and diffable.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import math
import sys
from fractions import Fraction

from . import certified, contfrac, core, rational, regularity

EXIT_BAD_ARGS = 2
EXIT_PRECISION = 3


def _jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, float) and math.isinf(obj):
        return "-inf" if obj < 0 else "inf"
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(args, rows=None, header=None, payload=None, scalar=None):
    """Write the command result in the selected format.

    CSV mode prints `header` + `rows` when tabular data exists, otherwise
    key,value lines from `payload`; JSON mode always emits `payload` (the
    report object), falling back to the rows.
    """
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.format == "json":
            data = payload if payload is not None else {"rows": rows, "header": header}
            json.dump(_jsonable(data), out, indent=2)
            out.write("\n")
        elif rows is not None:
            out.write(",".join(header) + "\n")
            for row in rows:
                out.write(",".join(_csv_cell(v) for v in row) + "\n")
        elif scalar is not None:
            out.write(_csv_cell(scalar) + "\n")
        else:
            for k, v in _jsonable(payload).items():
                out.write(f"{k},{_flat(v)}\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _csv_cell(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _flat(v):
    if isinstance(v, list):
        return ";".join(str(x) for x in v)
    return str(v)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(_fail(f"cannot parse {text!r} as a fraction: {exc}"))


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_BAD_ARGS


def _resolve_real(args) -> certified.CertifiedReal:
    """Build the CertifiedReal input selected by --constant / --rational /
    --synth-tau."""
    picked = [
        name
        for name in ("constant", "rational", "synth_tau")
        if getattr(args, name, None) is not None
    ]
    if len(picked) != 1:
        raise SystemExit(_fail("pick exactly one of --constant, --rational, --synth-tau"))
    if args.constant is not None:
        return certified.make_constant(args.constant, args.digits)
    if args.rational is not None:
        return certified.CertifiedReal(_parse_fraction(args.rational), Fraction(0))
    return certified.synthesize_prescribed_tau(args.synth_tau, args.terms).value


def _add_real_input(p: argparse.ArgumentParser):
    p.add_argument("--constant", choices=certified.CONSTANT_NAMES)
    p.add_argument("--rational", metavar="P/Q")
    p.add_argument("--synth-tau", type=float, metavar="T")
    p.add_argument("--terms", type=int, default=12, help="terms for --synth-tau")
    p.add_argument("--digits", type=int, default=100, help="precision for --constant")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thomae", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None)
        p.add_argument("--theta", type=float, default=1.0)
        return p

    p = common(sub.add_parser("eval", help="evaluate the function at a rational"))
    p.add_argument("x", metavar="P/Q")

    p = common(sub.add_parser("sample", help="CSV of (x, f(x)) over interior Farey points"))
    p.add_argument("--qmax", type=int, default=1000)

    p = common(sub.add_parser("cf", help="certified continued fraction and convergents"))
    _add_real_input(p)
    p.add_argument("--max-terms", type=int, default=40)

    p = common(sub.add_parser("tau", help="irrationality-exponent estimate"))
    _add_real_input(p)
    p.add_argument("--max-terms", type=int, default=40)

    p = common(sub.add_parser("holder", help="pointwise Holder exponent estimates"))
    _add_real_input(p)
    p.add_argument("--max-terms", type=int, default=40)
    p.add_argument("--min-scale", type=int, default=40, help="smallest scale 2^-k")
    p.add_argument("--max-scale", type=int, default=5, help="largest scale 2^-k")

    p = common(sub.add_parser("spectrum", help="Holder spectrum value at h"))
    p.add_argument("--h", type=float, required=True)

    p = common(sub.add_parser("boyd", help="Boyd scaling bounds and indices"))
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--x", type=float, default=1e-8, help="smallest scale ratio")
    p.add_argument("--grid", type=int, default=200, help="grid points per decade")
    p.add_argument("--points", type=int, default=7, help="number of x values (decade steps up from --x)")

    p = common(sub.add_parser("darboux", help="upper Darboux sum on n cells"))
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("synth", help="synthesize an irrational with prescribed exponent"))
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--terms", type=int, default=12)

    p = common(sub.add_parser("figure-data", help="CSV samples for the scatter figures"))
    p.add_argument("--figure", type=int, choices=(1, 2), required=True)
    p.add_argument("--qmax", type=int, default=200)
    p.add_argument("--gamma", type=float, default=1.0)

    return ap


def _interior_farey(qmax: int) -> list[Fraction]:
    pts = rational.farey_in_interval(Fraction(0), Fraction(1), qmax)
    return [r for r in pts if 0 < r < 1]


def run(args) -> int:
    params = core.ThomaeParams(args.theta) if hasattr(args, "theta") else None

    if args.command == "eval":
        x = _parse_fraction(args.x)
        val = core.evaluate(x, params)
        _emit(args, payload={"x": x, "f": val}, scalar=val)
        return 0

    if args.command == "sample":
        rows = [(r, core.evaluate(r, params)) for r in _interior_farey(args.qmax)]
        rows = [(float(x), float(f)) for x, f in rows]
        _emit(args, rows=rows, header=("x", "f"),
              payload=[{"x": x, "f": f} for x, f in rows])
        return 0

    if args.command == "cf":
        x = _resolve_real(args)
        cf = contfrac.expand(x, args.max_terms)
        convs = contfrac.convergents(cf)
        rows = [(c.index, cf.digits[c.index - 1], c.p, c.q) for c in convs]
        _emit(args, rows=rows, header=("index", "a", "p", "q"),
              payload={"digits": cf.digits, "exhausted": cf.exhausted,
                       "certified_count": cf.certified_count,
                       "convergents": convs})
        return 0

    if args.command == "tau":
        x = _resolve_real(args)
        cf = contfrac.expand(x, args.max_terms)
        est = contfrac.tau_sequence(x, contfrac.convergents(cf))
        rows = list(enumerate(est.tau_seq))
        _emit(args, rows=rows, header=("index", "tau"), payload=est)
        return 0

    if args.command == "holder":
        x = _resolve_real(args)
        conv = regularity.holder_estimate_convergents(x, params, args.max_terms)
        scales = [Fraction(1, 2**k) for k in range(args.max_scale, args.min_scale + 1)]
        osc = regularity.holder_estimate_oscillation(x, params, scales)
        payload = {
            "est_convergent": conv.est_convergent,
            "est_oscillation": osc.est_oscillation,
            "tau_hat": conv.tau.tau_hat,
            "constant_C": conv.constant_C,
            "fit": osc.fit,
        }
        _emit(args, payload=payload)
        return 0

    if args.command == "spectrum":
        pt = regularity.spectrum(args.h, params)
        _emit(args, payload=pt)
        return 0

    if args.command == "boyd":
        phi = regularity.BoydFunction(theta=args.theta, gamma=args.gamma)
        xs = [args.x * 10**k for k in range(args.points)]
        xs = [v for v in xs if v < 1]
        idx = regularity.boyd_indices(phi, xs, grid=args.grid)
        bounds = regularity.boyd_bounds(phi, min(xs), grid=args.grid)
        payload = {
            "lower": bounds.lower, "upper": bounds.upper, "certified": bounds.certified,
            "s_lower": idx.s_lower, "s_upper": idx.s_upper, "trend": idx.trend,
        }
        _emit(args, payload=payload)
        return 0

    if args.command == "darboux":
        val = core.upper_darboux(args.n, params)
        _emit(args, payload={"n": args.n, "value": val}, scalar=val)
        return 0

    if args.command == "synth":
        s = certified.synthesize_prescribed_tau(args.tau, args.terms)
        rows = list(enumerate(s.digits, start=1))
        _emit(args, rows=rows, header=("index", "a"),
              payload={"target_tau": s.target_tau, "digits": s.digits,
                       "mid": s.value.mid, "rad": float(s.value.rad)})
        return 0

    if args.command == "figure-data":
        pts = _interior_farey(args.qmax)
        if args.figure == 1:
            rows = [(float(r), float(core.evaluate(r, params))) for r in pts]
        else:
            phi = regularity.BoydFunction(theta=args.theta, gamma=args.gamma)
            rows = [(float(r), regularity.eval_generalized(r, phi)) for r in pts]
        _emit(args, rows=rows, header=("x", "f"),
              payload=[{"x": x, "f": f} for x, f in rows])
        return 0

    raise SystemExit(_fail(f"unknown command {args.command!r}"))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except certified.InsufficientPrecision as exc:
        print(f"insufficient precision: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
