"""Command-line interface.

    dets2 eval PATH [--backend rational|float] [--all-formulas]
    dets2 solve PATH [--svg OUTPATH]
    dets2 uniqueness
    dets2 --version

Exit status: 0 success, 1 bad input or usage, 2 internal error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .configfile import ConfigError, load_config
from .core import TRIPLES, det_s2_direct, det_s2_inner_product, det_s2_via_matrix
from .realizability import classify
from .scalar import EXACT, FLOAT
from .svg import emit_svg
from .universality import (
    build_constraint_matrix,
    canonical_coefficients,
    match_sign,
    solve_uniqueness,
    support,
)

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

BACKENDS = {"rational": EXACT, "float": FLOAT}
FLOAT_AGREE_TOL = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for internal errors here
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    return repr(x) if isinstance(x, float) else str(x)


def fmt_vector(xs) -> str:
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


def svg_paths(outpath: str, count: int) -> list[Path]:
    """``out.svg`` -> ``out-0.svg``, ``out-1.svg``, ..."""
    p = Path(outpath)
    suffix = p.suffix or ".svg"
    return [p.with_name(f"{p.stem}-{n}{suffix}") for n in range(count)]


def cmd_eval(path: str, backend: str = "rational", all_formulas: bool = False,
             out: TextIO | None = None) -> int:
    out = out or sys.stdout
    c = load_config(path, BACKENDS[backend])
    if not all_formulas:
        print(fmt(det_s2_direct(c)), file=out)
        return EXIT_OK
    values = {
        "direct": det_s2_direct(c),
        "inner_product": det_s2_inner_product(c),
        "matrix": det_s2_via_matrix(c),
    }
    for name, value in values.items():
        print(f"{name} {fmt(value)}", file=out)
    v = list(values.values())
    if c.backend == EXACT:
        agree = v[0] == v[1] == v[2]
    else:
        agree = all(
            math.isclose(a, v[0], rel_tol=FLOAT_AGREE_TOL, abs_tol=FLOAT_AGREE_TOL)
            for a in v[1:]
        )
    print("AGREE" if agree else "DISAGREE", file=out)
    return EXIT_OK


def cmd_solve(path: str, svg: str | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    c = load_config(path, EXACT)
    result = classify(c)
    print(f"det {fmt(det_s2_direct(c))}", file=out)
    print(f"rank {result.rank}", file=out)
    print("REALIZABLE" if result.realizable else "NOT REALIZABLE", file=out)
    if not result.realizable:
        return EXIT_OK
    print(f"nullity {result.nullity}", file=out)
    print("lambda order (l12, l23, l34, l13, l24, l14)", file=out)
    for n, (lam, quad) in enumerate(zip(result.lambda_basis, result.quadrilaterals)):
        print(f"lambda[{n}] {fmt_vector(lam)}", file=out)
        points = " ".join(f"Q{k}={fmt_vector(quad[k])}" for k in range(1, 5))
        print(f"quad[{n}] {points}", file=out)
    if svg is not None:
        for target, quad in zip(svg_paths(svg, result.nullity), result.quadrilaterals):
            try:
                emit_svg(quad, c, target)
            except OSError as exc:
                raise ConfigError(f"cannot write {target}: {exc.strerror or exc}") from exc
            print(f"wrote {target}", file=out)
    return EXIT_OK


def cmd_uniqueness(triples=TRIPLES, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    m = build_constraint_matrix(triples)
    dim, gen = solve_uniqueness(triples)
    print(f"constraints {m.rows} x {m.cols}", file=out)
    print(f"dimension {dim}", file=out)
    if gen is None:
        print("no unique generator", file=out)
        return EXIT_INTERNAL
    print(f"support {len(support(gen))} nonzero", file=out)
    sign = match_sign(gen, canonical_coefficients())
    if sign is None:
        print("MISMATCH: generator is not proportional to the canonical formula", file=out)
        return EXIT_INTERNAL
    print(f"MATCHES CANONICAL {sign:+d}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dets2", description="Evaluate and analyse the det^{S^2} map.")
    parser.add_argument("--version", action="version", version=f"dets2 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate det^{S^2} of a configuration file")
    p_eval.add_argument("path")
    p_eval.add_argument("--backend", choices=sorted(BACKENDS), default="rational")
    p_eval.add_argument("--all-formulas", action="store_true",
                        help="evaluate all three formulas and compare")

    p_solve = sub.add_parser("solve", help="decide realizability and reconstruct")
    p_solve.add_argument("path")
    p_solve.add_argument("--svg", metavar="OUTPATH",
                         help="write one SVG per lambda basis vector (OUTPATH-0.svg, ...)")

    sub.add_parser("uniqueness", help="re-derive the map from its vanishing property")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "eval":
            return cmd_eval(args.path, args.backend, args.all_formulas)
        if args.command == "solve":
            return cmd_solve(args.path, args.svg)
        return cmd_uniqueness()
    except (UsageError, ConfigError) as exc:
        print(f"dets2: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
