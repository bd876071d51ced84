"""
Command-line front end.

    pt2x2 verify    --model h4 -r 0.6 -s 1 --theta 1.5707963267948966 --format json
    pt2x2 sweep     --model h4 --r-range 0 2 20 --s-range 0.5 1.5 20 --theta-range 0 3.141592653589793 20 --out grid.csv
    pt2x2 decompose --model h4 -r 0.6 -s 1 --theta 90 --deg

Exit codes: 0 success, 1 a numerical contract was violated, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .exceptions import PT2x2Error
from .linalg2 import IDENTITY, PREDICATE_TOL, dagger, eigh2, fnorm
from .models import Params4
from .report import MODELS, SWEEP_COLUMNS, SweepSpec, build, make_params, matrix_json, verify_point, write_sweep
from .weak import Regime, completed_polar, regime_operator

EXIT_OK, EXIT_CONTRACT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _add_point_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=MODELS, default="h4", help="matrix family (default: h4)")
    p.add_argument("-r", type=_finite_float, required=True, help="diagonal modulus r >= 0")
    p.add_argument("-s", type=_finite_float, required=True, help="lower off-diagonal s")
    p.add_argument("-t", type=_finite_float, default=None, help="upper off-diagonal t (h5 only)")
    p.add_argument("--theta", type=_finite_float, required=True, help="diagonal phase angle (radians)")
    p.add_argument("--deg", action="store_true", help="read angles in degrees")
    p.add_argument("--format", choices=("table", "json"), default="table")


def _range(text_triplet):
    lo, hi, steps = text_triplet
    if steps != int(steps):
        raise UsageError(f"steps must be an integer, got {steps}")
    return (lo, hi, int(steps))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pt2x2", description="Checks for 2x2 PT-symmetric matrix models.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run every applicable check at one parameter point")
    _add_point_flags(verify)

    sweep = sub.add_parser("sweep", help="evaluate a parameter grid and write CSV")
    sweep.add_argument("--model", choices=MODELS, default="h4")
    for name in ("r", "s", "t", "theta"):
        sweep.add_argument(
            f"--{name}-range",
            nargs=3,
            type=_finite_float,
            metavar=("MIN", "MAX", "STEPS"),
            required=name in ("r", "s", "theta"),
            help="t is required for h5 and ignored for h4" if name == "t" else None,
        )
    sweep.add_argument("--deg", action="store_true", help="read theta range in degrees")
    sweep.add_argument("--columns", default=",".join(SWEEP_COLUMNS), help="comma-separated output columns")
    sweep.add_argument("--out", required=True, help="CSV output path ('-' for stdout)")

    decompose = sub.add_parser("decompose", help="print the polar factors H = U R")
    _add_point_flags(decompose)
    return parser


def _point(args):
    theta = math.radians(args.theta) if args.deg else args.theta
    t = args.t if args.model == "h5" else None
    return make_params(args.model, args.r, args.s, t, theta)


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, dict) and set(x) == {"re", "im"}:
        return f"{x['re']:.12g}{x['im']:+.12g}j"
    if isinstance(x, float):
        return f"{x:.12g}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    return str(x)


def _fmt_matrix(m: np.ndarray) -> list[str]:
    cells = [[f"{z.real:.12g}{z.imag:+.12g}j" for z in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return ["[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells]


def _table(rows: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {_fmt(v)}" for k, v in rows)


def render_verify_table(d: dict) -> str:
    rows = [("model", d["model"])]
    rows += [(k, v) for k, v in d["params"].items()]
    rows += [
        ("phase", d["phase"]["kind"]),
        ("discriminant", d["phase"]["discriminant"]),
        ("spectrum", d["spectrum"]),
        ("spectrum_oracle_error", d["spectrum_oracle_error"]),
    ]
    res = d["residuals"]
    if isinstance(res, dict):
        rows += [
            ("residual_plus", res["residual_plus"]),
            ("residual_minus", res["residual_minus"]),
            ("s_equals_t", res["s_equals_t"]),
        ]
    elif res is not None:
        rows.append(("residuals", res))
    rows += [("polar_check", d["polar_check"]), ("polar_reconstruction", d["polar_reconstruction"])]
    if d["regime"] is not None:
        rows += [("regime", d["regime"]["regime"]), ("regime_eigs", d["regime"]["eigs"])]
    rows += [
        ("isospectral_gap", d["isospectral_gap"]),
        ("regime_gaps", d["regime_gaps"]),
        ("pipeline_error", d["pipeline_error"]),
    ]
    rows += [(f"contract:{k}", "ok" if v else "VIOLATED") for k, v in d["contracts"].items()]
    return _table(rows)


def cmd_verify(args, out) -> int:
    report = verify_point(_point(args))
    d = report.to_dict()
    if args.format == "json":
        out.write(json.dumps(d, indent=2) + "\n")
    else:
        out.write(render_verify_table(d) + "\n")
    return EXIT_OK if report.ok else EXIT_CONTRACT


def cmd_sweep(args, out) -> int:
    theta_range = _range(args.theta_range)
    if args.deg:
        theta_range = (math.radians(theta_range[0]), math.radians(theta_range[1]), theta_range[2])
    spec = SweepSpec(
        r_range=_range(args.r_range),
        s_range=_range(args.s_range),
        t_range=_range(args.t_range) if args.t_range is not None else None,
        theta_range=theta_range,
        model=args.model,
        outputs=tuple(c.strip() for c in args.columns.split(",") if c.strip()),
    )
    # validate the whole grid before touching the output file
    list(spec.points())
    if args.out == "-":
        write_sweep(spec, out)
    else:
        write_sweep(spec, args.out)
    return EXIT_OK


def _regime_match(p, r: np.ndarray) -> str:
    if not p.s > 0:
        return "none"
    op = regime_operator(Params4(p.r, p.s, p.theta))
    if fnorm(r - op.matrix) > PREDICATE_TOL * (1 + p.r + p.s):
        return "none"
    return {
        Regime.R_GREATER: "R1 (r > s form)",
        Regime.S_GREATER: "R2 (r < s form)",
        Regime.BOUNDARY: "R1 form at the r = s boundary",
    }[op.regime]


def decompose(p) -> tuple[dict, np.ndarray, object]:
    h = build(p)
    factors = completed_polar(h)
    w, _ = eigh2(factors.r)
    d = {
        "params": {"r": p.r, "s": p.s, "t": p.t, "theta": p.theta},
        "H": matrix_json(h),
        "U": matrix_json(factors.u),
        "R": matrix_json(factors.r),
        "reconstruction_error": fnorm(factors.u @ factors.r - h),
        "unitarity_error": fnorm(dagger(factors.u) @ factors.u - IDENTITY),
        "R_eigenvalues": [float(w[0]), float(w[1])],
        "matches": _regime_match(p, factors.r),
        "boundary": bool(abs(w[1]) <= 1e-12 * (1 + abs(w[0]))),
    }
    return d, h, factors


def cmd_decompose(args, out) -> int:
    d, h, factors = decompose(_point(args))
    if args.format == "json":
        out.write(json.dumps(d, indent=2) + "\n")
    else:
        lines = []
        for name, m in (("H", h), ("U", factors.u), ("R", factors.r)):
            lines.append(f"{name} =")
            lines += ["  " + row for row in _fmt_matrix(m)]
        lines.append(
            _table(
                [
                    ("|UR - H|", d["reconstruction_error"]),
                    ("|U^H U - I|", d["unitarity_error"]),
                    ("R eigenvalues", d["R_eigenvalues"]),
                    ("matches", d["matches"]),
                ]
            )
        )
        if d["boundary"]:
            lines.append(
                "note: R is singular (r = s boundary); U was completed on the null space of R "
                "with the eigenbasis of H^H H, so U R = H still holds"
            )
        out.write("\n".join(lines) + "\n")
    ok = d["reconstruction_error"] <= PREDICATE_TOL * (1 + fnorm(h)) and d["unitarity_error"] <= PREDICATE_TOL
    return EXIT_OK if ok else EXIT_CONTRACT


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "decompose": cmd_decompose}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, PT2x2Error, ValueError, OSError) as exc:
        print(f"pt2x2 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
