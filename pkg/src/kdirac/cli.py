"""Command line front end.

Exit codes: 0 success, 2 invalid parameters, 3 dominance violation,
4 failed structural or property check.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import render
from .bgg import build_bgg
from .dirac4 import run_checks
from .errors import DominanceError, InvalidParameterError, StructuralError
from .hasse import build_hasse
from .pushdown import build_complex, direct_images
from .weights import parse_weight2

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DOMINANCE = 3
EXIT_STRUCTURE = 4


def _add_common(p: argparse.ArgumentParser, formats=render.FORMATS) -> None:
    p.add_argument("--k", type=int, required=True, help="number of variables (at least 2)")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--half", action="store_true", help="print true half-integer coordinates")


def cmd_hasse(args) -> str:
    return render.render_hasse(build_hasse(args.k), args.format)


def cmd_bgg(args) -> str:
    build_hasse(args.k)  # rank check before parsing the seed
    seed = parse_weight2(args.k, args.seed) if args.seed else None
    return render.render_bgg(build_bgg(args.k, seed), args.format, args.half)


def cmd_pushdown(args) -> str:
    cx = build_complex(args.k)
    d = build_bgg(args.k)
    return render.render_pushdown(d, direct_images(d), cx, args.format, args.half)


def cmd_complex(args) -> str:
    cx = build_complex(args.k)
    if args.format == "json":
        d = build_bgg(args.k)
        return render._dumps(render.full_record(d, direct_images(d), cx))
    return render.render_complex(cx, args.format, args.half)


def cmd_dims(args) -> str:
    return render.render_dims(build_complex(args.k))


def cmd_check_dirac(args) -> str:
    if args.k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {args.k}")
    start = time.perf_counter()
    reports = run_checks(args.k, args.degree, args.trials, args.seedrng)
    elapsed = time.perf_counter() - start
    lines = [
        f"Dirac operator in {args.k} variables, dimension 4: degree <= {args.degree}, seed {args.seedrng}"
    ]
    lines += [str(r) for r in reports]
    out = "\n".join(lines) + "\n"
    if not all(r.ok for r in reports):
        raise StructuralError(out.rstrip())
    print(f"({elapsed:.2f}s)", file=sys.stderr)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdirac",
        description="Relative BGG diagram, direct images and the pushed-down k-Dirac complex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hasse", help="relative Hasse diagram of the fibre")
    _add_common(p)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("bgg", help="weight-labelled relative BGG diagram")
    _add_common(p)
    p.add_argument("--seed", help="doubled seed coordinates, comma separated (default: canonical)")
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("pushdown", help="direct images of the BGG weights")
    _add_common(p)
    p.set_defaults(func=cmd_pushdown)

    p = sub.add_parser("complex", help="the pushed-down complex with operator orders")
    _add_common(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("dims", help="dimension table of the complex")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("check-dirac", help="exact property checks of the first operator")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seedrng", type=int, default=0)
    p.set_defaults(func=cmd_check_dirac)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except DominanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMINANCE
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
