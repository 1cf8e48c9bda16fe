"""Command-line surface: chi-curve, spikes, census, classify, verify.

All numeric output is printed with 17 significant digits so runs are
reproducible across platforms.  Exit codes: 0 success/PASS, 1 runtime
failure or FAIL, 2 usage error, 3 unclassified sample.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .circle import load_point_file
from .classify import classify
from .errors import CechCircleError, PointFileError, UnclassifiedError
from .exact import expected_euler_curve, spike_analysis
from .montecarlo import (
    run_census,
    verify_theorem_a1,
    verify_theorem_a2,
    verify_theorem_b,
    verify_theorem_elder_c,
)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_UNCLASSIFIED = 3


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            [{k: (_fmt(v) if isinstance(v, float) else v) for k, v in row.items()} for row in rows],
            indent=2,
        ) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt(v) for k, v in row.items()})
    return buf.getvalue()


def _default_threads() -> int:
    return int(os.environ.get("CECHCIRCLE_THREADS", "1"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cechcircle",
        description="Random Cech complexes on the circle: exact curves, "
        "homotopy classification, seeded Monte Carlo censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi-curve", help="expected Euler characteristic on a t grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")

    p = sub.add_parser("spikes", help="spike analytics for m = 2..M")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")

    p = sub.add_parser("census", help="seeded homotopy-type census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--no-cross-check", action="store_true",
                   help="skip the per-trial Euler characteristic cross-check")
    p.add_argument("--output")

    p = sub.add_parser("classify", help="homotopy type of a point file")
    p.add_argument("--input", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--output")

    p = sub.add_parser("verify", help="statistical theorem verification")
    p.add_argument("theorem", choices=["a1", "a2", "b", "c"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--margin", type=float, default=0.05)
    p.add_argument("--slack", type=float, default=0.1)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--output")
    return parser


def cmd_chi_curve(args) -> int:
    if args.steps < 1:
        raise CechCircleError("--steps must be >= 1")
    if args.steps == 1:
        grid = [args.t_min]
        if args.t_min != args.t_max:
            raise CechCircleError("--steps 1 requires t-min == t-max")
    else:
        width = (args.t_max - args.t_min) / (args.steps - 1)
        grid = [args.t_min + i * width for i in range(args.steps)]
        grid[-1] = args.t_max  # endpoint-inclusive
    rows = [
        {"n": args.n, "t": t, "chi": chi, "chi_normalized": norm}
        for t, chi, norm in expected_euler_curve(args.n, grid)
    ]
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


def cmd_spikes(args) -> int:
    rows = []
    for m in range(2, args.max_m + 1):
        try:
            spike = spike_analysis(m, args.n, args.epsilon)
        except CechCircleError as exc:
            print(f"warning: skipping m={m}: {exc}", file=sys.stderr)
            continue
        rows.append({
            "m": m,
            "center_t": spike.center_t,
            "a_mn": spike.a_mn,
            "b_mn": spike.b_mn,
            "omega_m": spike.omega_m,
            "alpha_lo": spike.window_rho[0],
            "alpha_hi": spike.window_rho[1],
        })
    if not rows:
        print("warning: no spike rows satisfy the preconditions", file=sys.stderr)
        _emit("m,center_t,a_mn,b_mn,omega_m,alpha_lo,alpha_hi\r\n", args.output)
        return EXIT_OK
    _emit(_table(rows, args.format), args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    workers = args.threads if args.threads is not None else _default_threads()
    census = run_census(
        args.n, args.t, args.trials, args.seed,
        workers=workers, cross_check=not args.no_cross_check,
    )
    _emit(census.to_json() + "\n", args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    config = load_point_file(args.input)
    ht = classify(config, args.t)
    payload = {
        "type": ht.to_json(),
        "display": ht.display(),
        "betti": list(ht.betti()),
        "euler_characteristic": ht.euler_characteristic(),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    workers = args.threads if args.threads is not None else _default_threads()
    if args.theorem == "a1":
        if args.t is None:
            raise CechCircleError("verify a1 requires --t")
        report = verify_theorem_a1(args.n, args.t, args.trials, args.seed)
    elif args.theorem == "a2":
        if args.k is None:
            raise CechCircleError("verify a2 requires --k")
        report = verify_theorem_a2(
            args.k, args.n, args.trials, args.seed, t=args.t, margin=args.margin,
        )
    elif args.theorem == "b":
        if args.k is None or args.t is None:
            raise CechCircleError("verify b requires --k and --t")
        report = verify_theorem_b(args.k, args.n, args.t, args.trials, args.seed)
    else:
        if args.k is None:
            raise CechCircleError("verify c requires --k")
        report = verify_theorem_elder_c(
            args.k, args.n, args.trials, args.seed,
            delta=args.delta, epsilon=args.epsilon, slack=args.slack,
            workers=workers,
        )
    _emit(report.to_json() + "\n", args.output)
    print("PASS" if report.passed else "FAIL", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_RUNTIME


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "chi-curve": cmd_chi_curve,
        "spikes": cmd_spikes,
        "census": cmd_census,
        "classify": cmd_classify,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except PointFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnclassifiedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCLASSIFIED
    except CechCircleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
