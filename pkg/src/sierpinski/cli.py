"""Command-line front end.

Subcommands: digits, matrix, expand, verify, triangle.  Exit codes follow
the usual convention: 0 success / all checks passed, 1 a verification found
a counterexample, 2 usage or size-limit error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from . import identities, matrices
from .algebra import ONE, ZERO, Poly, X, Y
from .digits import DigitVector
from .errors import SizeLimitError

USAGE_ERROR = 2
COUNTEREXAMPLE = 1

_ARGS = {"x": X, "one": ONE, "zero": ZERO}


@dataclass(frozen=True)
class RenderSpec:
    rows_or_order: int
    modulus: int
    format: str  # ascii | pbm | csv
    source: str  # pascal-mod | matrix-ones


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sierpinski",
        description="Exact Sierpinski matrices, digit-sum identities, and triangle patterns.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", parents=[common], help="digit expansion and digit sum")
    p.add_argument("value", type=_nonnegative_int)
    p.add_argument("--base", type=int, default=2)

    p = sub.add_parser("matrix", parents=[common], help="emit a family matrix")
    p.add_argument("order", type=_nonnegative_int)
    p.add_argument("--arg", choices=sorted(_ARGS), default="x")
    p.add_argument("--construction", choices=["kronecker", "closed"], default="kronecker")
    p.add_argument("--format", choices=["compact", "poly"], default="compact")
    p.add_argument("--check", action="store_true", help="build both ways and compare")
    p.add_argument("--max-order", type=_positive_int, default=matrices.MAX_BUILD_ORDER)

    p = sub.add_parser("expand", parents=[common], help="digital binomial expansion of m")
    p.add_argument("m", type=_nonnegative_int)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "suite",
        choices=["binomial", "additivity", "group", "kummer", "correspondence", "all"],
    )
    p.add_argument("--max-m", type=_positive_int, default=1024)
    p.add_argument("--order", type=_nonnegative_int, default=None)
    p.add_argument("--max-n", type=_positive_int, default=64)
    p.add_argument("--p", type=int, default=2)

    p = sub.add_parser("triangle", parents=[common], help="render a triangle pattern")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rows", type=_positive_int, help="Pascal rows (pascal-mod source)")
    group.add_argument("--order", type=_nonnegative_int, help="matrix order (matrix-ones source)")
    p.add_argument("--mod", type=int, default=2)
    p.add_argument("--format", choices=["ascii", "pbm", "csv"], default="ascii")
    p.add_argument("--source", choices=["pascal-mod", "matrix-ones"], default=None)

    return parser


def cmd_digits(args, out) -> int:
    vec = DigitVector(args.value, args.base)
    print(f"value={vec.value}", file=out)
    print(f"base={vec.base}", file=out)
    print("digits=" + ",".join(str(d) for d in vec.digits), file=out)
    print(f"s={vec.digit_sum()}", file=out)
    return 0


def _build(order: int, arg: Poly, construction: str, max_order: int):
    if construction == "closed":
        return matrices.build_closed_form(order, arg, max_order)
    return matrices.build_recursive(order, arg, max_order)


def cmd_matrix(args, out) -> int:
    arg = _ARGS[args.arg]
    matrix = _build(args.order, arg, args.construction, args.max_order)
    if args.check:
        other = "closed" if args.construction == "kronecker" else "kronecker"
        same = matrices.matrices_equal(matrix, _build(args.order, arg, other, args.max_order))
        print("identity: construction-equivalence", file=out)
        print(f"parameter: order={args.order} arg={args.arg}", file=out)
        print(f"status: {'pass' if same else 'fail'}", file=out)
        return 0 if same else COUNTEREXAMPLE
    if args.format == "poly":
        print(matrix.dump(), file=out)
    else:
        poly_rows = matrix.to_poly_matrix()
        for j in range(matrix.size):
            row = poly_rows.row(j)
            print(" ".join(row[k].pretty() if k in row else "0" for k in range(matrix.size)), file=out)
    return 0


def cmd_expand(args, out) -> int:
    expansion = identities.digital_expansion(args.m)
    for k, a, b in expansion.terms:
        print(f"{k} {a} {b}", file=out)
    print(expansion.collect().pretty(), file=out)
    return 0


def _verify_one(suite: str, args, out) -> bool:
    if suite == "binomial":
        for m in range(args.max_m):
            report = identities.verify_digital_binomial(m)
            if not report:
                print(report.to_text(), file=out)
                return False
        print(f"identity: digital-binomial\nparameter: m<{args.max_m}\nstatus: pass", file=out)
        return True
    if suite == "additivity":
        for m in range(args.max_m):
            if not identities.verify_additivity_form(m):
                print(
                    f"identity: digit-sum-additivity\nparameter: m={m}\nstatus: fail",
                    file=out,
                )
                return False
        print(f"identity: digit-sum-additivity\nparameter: m<{args.max_m}\nstatus: pass", file=out)
        return True
    if suite == "group":
        order = 4 if args.order is None else args.order
        lhs = matrices.matmul(
            matrices.build_recursive(order, X), matrices.build_recursive(order, Y)
        )
        rhs = matrices.build_recursive(order, X + Y)
        same = matrices.matrices_equal(lhs, rhs)
        inverse = matrices.matrices_equal(
            matrices.matmul(
                matrices.build_recursive(order, X), matrices.build_recursive(order, -X)
            ),
            matrices.identity(order),
        )
        print("identity: group-law", file=out)
        print(f"parameter: order={order}", file=out)
        print(f"status: {'pass' if same and inverse else 'fail'}", file=out)
        return same and inverse
    if suite == "kummer":
        report = identities.verify_kummer(args.max_n, args.p)
        print(report.to_text(), file=out)
        return report.passed
    if suite == "correspondence":
        order = 8 if args.order is None else args.order
        same = identities.verify_triangle_matrix_correspondence(order)
        print("identity: triangle-matrix-correspondence", file=out)
        print(f"parameter: order={order}", file=out)
        print(f"status: {'pass' if same else 'fail'}", file=out)
        return same
    raise AssertionError(suite)


def cmd_verify(args, out) -> int:
    suites = (
        ["binomial", "additivity", "group", "kummer", "correspondence"]
        if args.suite == "all"
        else [args.suite]
    )
    ok = True
    for i, suite in enumerate(suites):
        if i:
            print("", file=out)
        ok = _verify_one(suite, args, out) and ok
    return 0 if ok else COUNTEREXAMPLE


def _triangle_cells(spec: RenderSpec):
    if spec.source == "matrix-ones":
        matrix = matrices.build_closed_form(spec.rows_or_order, ONE)
        rows = []
        for j in range(matrix.size):
            stored = {k for k, _ in matrix.rows[j]}
            rows.append(tuple(1 if k in stored else 0 for k in range(j + 1)))
        return tuple(rows)
    return identities.pascal_mod(spec.rows_or_order, spec.modulus).cells


def render_ascii(cells, modulus: int) -> str:
    # one character per cell; at p=2 a blank stands for residue 0
    if modulus > 7:
        raise ValueError("ascii format needs single-character residues (mod <= 7)")
    lines = []
    for row in cells:
        if modulus == 2:
            lines.append("".join("1" if c else " " for c in row).rstrip())
        else:
            lines.append("".join(str(c) for c in row))
    return "\n".join(lines)


def render_pbm(cells) -> str:
    # P1 text raster, square: triangle rows padded right with zeros
    width = len(cells)
    lines = ["P1", f"{width} {width}"]
    for row in cells:
        padded = list(row) + [0] * (width - len(row))
        lines.append(" ".join("1" if c else "0" for c in padded))
    return "\n".join(lines)


def cmd_triangle(args, out) -> int:
    source = args.source
    if source is None:
        source = "matrix-ones" if args.order is not None else "pascal-mod"
    if source == "matrix-ones" and args.order is None:
        raise ValueError("--source matrix-ones requires --order")
    if source == "pascal-mod" and args.rows is None:
        raise ValueError("--source pascal-mod requires --rows")
    if source == "matrix-ones" and args.mod != 2:
        raise ValueError("matrix-ones patterns are mod-2 only")
    spec = RenderSpec(
        rows_or_order=args.order if source == "matrix-ones" else args.rows,
        modulus=args.mod,
        format=args.format,
        source=source,
    )
    cells = _triangle_cells(spec)
    if spec.format == "ascii":
        print(render_ascii(cells, spec.modulus), file=out)
    elif spec.format == "pbm":
        print(render_pbm(cells), file=out)
    else:
        writer = csv.writer(out)
        for row in cells:
            writer.writerow(row)
    return 0


_COMMANDS = {
    "digits": cmd_digits,
    "matrix": cmd_matrix,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "triangle": cmd_triangle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        if args.output:
            with open(args.output, "w", newline="") as out:
                return handler(args, out)
        return handler(args, sys.stdout)
    except (SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
