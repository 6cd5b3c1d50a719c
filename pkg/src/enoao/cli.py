"""Command-line entry point: run cases, convergence studies, ADR sweeps."""

import argparse
import sys

import numpy as np

from . import cases, harness
from .scalar import NumericsError

EXIT_CONFIG = 2
EXIT_NUMERICS = 3


def _add_common(p):
    p.add_argument("--scheme", default="ENO-AO5", help="one of " + ", ".join(harness.SCHEMES))
    p.add_argument("--delta", type=float, default=1e-5, help="ENO-AO threshold")
    p.add_argument("--out", default=None, help="output directory (CSV + metadata)")


def build_parser():
    ap = argparse.ArgumentParser(prog="enoao", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run one benchmark case")
    p.add_argument("--case", required=True)
    p.add_argument("--mesh", type=int, default=None, help="points per unit length (1/dx)")
    p.add_argument("--cfl", type=float, default=0.3)
    p.add_argument("--t-end", type=float, default=None, help="override the case end time")
    p.add_argument("--full", action="store_true", help="paper-resolution mesh (slow)")
    _add_common(p)

    p = sub.add_parser("converge", help="convergence study on advection_sine")
    p.add_argument("--mesh", type=int, nargs="+", default=[20, 30, 40, 50])
    _add_common(p)

    p = sub.add_parser("adr", help="approximate dispersion relation sweep")
    _add_common(p)

    sub.add_parser("list-cases", help="show the case registry")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list-cases":
            for name, spec in cases.CASES.items():
                dom = " x ".join(f"[{a:g},{b:g}]" for a, b in spec.domain)
                print(f"{name:20s} {dom:22s} t_end={spec.t_end:<6g} "
                      f"1/dx={spec.default_n:<5d} {spec.description}")
            return 0

        if args.command == "run":
            cfg = harness.RunConfig(
                case=args.case, scheme=args.scheme, n=args.mesh, cfl=args.cfl,
                delta=args.delta, t_end=args.t_end, out=args.out, full=args.full,
            )
            res = harness.run(cfg)
            print(f"{args.case} / {args.scheme}: n={res.n}, {res.steps} steps, "
                  f"{res.wall_clock:.2f}s")
            print("conservation residual:",
                  np.array2string(res.conservation_residual, precision=3))
            for f in res.files:
                print("wrote", f)
            return 0

        if args.command == "converge":
            out = None
            if args.out:
                out = f"{args.out}/converge_{args.scheme}.csv"
            rows = harness.convergence_study(args.scheme, args.mesh, out=out)
            print(f"{'1/dx':>6} {'L1':>12} {'order':>6} {'Linf':>12} {'order':>6}")
            for n, l1, o1, li, oi in rows:
                o1s = f"{o1:6.2f}" if o1 == o1 else "     -"
                ois = f"{oi:6.2f}" if oi == oi else "     -"
                print(f"{n:>6} {l1:>12.3e} {o1s} {li:>12.3e} {ois}")
            return 0

        if args.command == "adr":
            out = None
            if args.out:
                out = f"{args.out}/adr_{args.scheme}.csv"
            rows = harness.adr_sweep(args.scheme, out=out)
            for kappa, re, im in rows:
                print(f"{kappa:8.5f} {re:12.8f} {im:13.8e}")
            return 0
    except (harness.ConfigError, ValueError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericsError as exc:
        print(f"numerics error: {exc}", file=sys.stderr)
        return EXIT_NUMERICS
    return 0


if __name__ == "__main__":
    sys.exit(main())
