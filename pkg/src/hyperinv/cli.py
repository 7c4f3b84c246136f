"""Command-line front end.

Exit codes: 0 success, 1 verification false, 2 usage error, 3 column cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dimensions as dims_mod
from .engine import (
    ColumnCapExceeded,
    column_cap,
    cube_commutes,
    cube_inclusion_exclusion,
    cube_lowering_maps,
    invariant_basis,
    verify_invariance_group,
    verify_invariance_lie,
)
from .formats import (
    matrix_csv,
    matrix_grid,
    matrix_to_dict,
    polynomial_from_json,
    polynomial_text,
)
from .lie import raising_matrix
from .linalg import Subspace, inclusion_exclusion_check
from .monomials import Shape, count_weight_space, enumerate_weight_space, parse_weight

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _shape(text):
    try:
        return Shape.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _range(text):
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(text), int(text) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad degree range {text!r}, expected LO..HI")


def _emit(data):
    print(json.dumps(data, indent=2))


def cmd_basis(args):
    shape = args.shape
    try:
        weight = parse_weight(shape, args.weight) if args.weight is not None else shape.zero_weight()
    except ValueError as exc:
        raise UsageError(str(exc))
    basis = enumerate_weight_space(shape, args.degree, weight)
    if args.format == "json":
        _emit(
            {
                "shape": list(shape.dims),
                "degree": args.degree,
                "weight": [list(c) for c in weight],
                "monomials": basis.labels(),
            }
        )
    elif args.format == "csv":
        for m in basis:
            print(",".join(str(e) for e in m.exponents))
    else:
        for lab in basis.labels():
            print(lab)
    return EXIT_OK


def cmd_matrix(args):
    count = count_weight_space(args.shape, args.degree, args.shape.zero_weight())
    if count > args.cap:
        raise ColumnCapExceeded(f"{count} zero-weight monomials exceed the cap {args.cap}")
    raising = raising_matrix(args.shape, args.degree)
    A = raising.matrix
    rows = raising.row_labels
    cols = raising.source.labels()
    if args.format == "json":
        data = matrix_to_dict(A, rows, cols)
        data["blocks"] = [
            {"generator": b.generator.label(args.shape), "weight": [list(c) for c in b.target.weight], "rows": len(b.target)}
            for b in raising.blocks
        ]
        _emit(data)
    elif args.format == "csv":
        sys.stdout.write(matrix_csv(A, rows, cols))
    else:
        text = matrix_grid(A, rows, [len(b.target) for b in raising.blocks])
        if text:
            print(text)
    return EXIT_OK


def cmd_invariants(args):
    report = invariant_basis(args.shape, args.degree, cap=args.cap, method=args.method)
    if args.format == "json":
        _emit(report.to_dict(timings=args.timings))
        return EXIT_OK
    print(
        f"shape {args.shape}  degree {args.degree}  zero-weight dim {report.zero_weight_dim}  "
        f"matrix {report.matrix_dims[0]}x{report.matrix_dims[1]}  rank {report.rank}  "
        f"kernel dim {report.kernel_dim}"
    )
    for i, p in enumerate(report.invariants, 1):
        print(f"\ninvariant {i}:")
        print(polynomial_text(p))
    return EXIT_OK


def cmd_dims(args):
    shape = args.shape
    if shape.is_cube222:
        rows = []
        for d in args.degree_range:
            row = {"degree": d}
            for label, w in dims_mod.CASE_WEIGHTS.items():
                row[label] = dims_mod.dim_formula(d, label)
                if args.check:
                    row[label + "_enum"] = len(enumerate_weight_space(shape, d, w))
            rows.append(row)
        ok = all(r[l] == r[l + "_enum"] for r in rows for l in dims_mod.CASE_WEIGHTS) if args.check else True
    else:
        rows = [
            {"degree": d, "zero_weight": count_weight_space(shape, d, shape.zero_weight())}
            for d in args.degree_range
        ]
        if args.check:
            for r in rows:
                r["zero_weight_enum"] = len(enumerate_weight_space(shape, r["degree"], shape.zero_weight()))
        ok = all(r["zero_weight"] == r["zero_weight_enum"] for r in rows) if args.check else True
    if args.format == "json":
        _emit({"shape": list(shape.dims), "rows": rows, "all_equal": ok})
    else:
        header = list(rows[0]) if rows else ["degree"]
        print("  ".join(f"{h:>10}" for h in header))
        for r in rows:
            print("  ".join(f"{r[h]:>10}" for h in header))
        if args.check:
            print("all equal" if ok else "MISMATCH")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_altsum(args):
    degrees = [d for d in args.degree_range if d % 2 == 0]
    rows = []
    for d in degrees:
        row = {"degree": d, "altsum": dims_mod.alternating_sum_222(d)}
        if args.kernel:
            row["kernel_dim"] = invariant_basis(Shape((2, 2, 2)), d, cap=args.cap).kernel_dim
        rows.append(row)
    if args.format == "json":
        _emit({"rows": rows})
    else:
        for r in rows:
            print("  ".join(f"{k} {v}" for k, v in r.items()))
    return EXIT_OK


def cmd_verify(args):
    try:
        with open(args.poly) as fh:
            p = polynomial_from_json(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read polynomial: {exc}")
    lie = verify_invariance_lie(p)
    group = verify_invariance_group(p, trials=args.trials, seed=args.seed)
    ok = lie.ok and group.ok
    if args.format == "json":
        _emit({"invariant": ok, "lie": lie.to_dict(), "group": group.to_dict()})
    else:
        print(f"lie algebra: {'annihilated' if lie.ok else 'NOT annihilated, witness ' + lie.witness}")
        print(f"group: {'fixed' if group.ok else 'NOT fixed by ' + group.witness} ({group.checked} elements)")
        print("invariant" if ok else "not invariant")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_conjecture(args):
    report = dims_mod.conjecture_fit(args.shape, args.max_degree, period=args.period)
    data = report.to_dict()
    if args.format == "json":
        _emit(data)
    else:
        print(
            f"shape {args.shape}  predicted degree {report.predicted_degree}  "
            f"period {report.period}  status {report.status}"
        )
        for f in report.fits:
            coeffs = ", ".join(str(c) for c in f.coefficients)
            print(
                f"  d = {f.residue} mod {report.period}: degree {f.degree} [{coeffs}]  "
                f"fitted {f.fitted}, checked {len(f.points) - f.fitted}, agrees {f.agrees}"
            )
    return EXIT_OK


def cmd_subspace_check(args):
    if args.input:
        try:
            with open(args.input) as fh:
                data = json.load(fh)
            ambient = int(data["ambient_dim"])
            spaces = [Subspace.span(ambient, vecs) for vecs in data["subspaces"]]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read subspaces: {exc}")
        result = inclusion_exclusion_check(spaces)
        commutes = None
    else:
        d = args.degree
        result = cube_inclusion_exclusion(d)
        maps = cube_lowering_maps(d)
        commutes = cube_commutes(d, maps=maps)
        injective = all(m.matrix.rank() == m.matrix.ncols for m in maps.values())
    out = {
        "lhs": result.lhs,
        "rhs": result.rhs,
        "holds": result.holds,
        "equality": result.equality,
        "intersection_dims": {",".join(str(i + 1) for i in k): v for k, v in result.intersection_dims.items()},
    }
    if commutes is not None:
        out.update(degree=args.degree, commutes=commutes, injective=injective)
    if args.format == "json":
        _emit(out)
    else:
        rel = "=" if result.equality else ("<=" if result.holds else ">")
        print(f"dim of sum {result.lhs} {rel} alternating sum {result.rhs}")
        if commutes is not None:
            print(f"lowering maps injective: {injective}; cube commutes: {commutes}")
    ok = result.holds and (commutes is None or (commutes and injective))
    return EXIT_OK if ok else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperinv", description="Invariant polynomials of arrays by weight-space kernels.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    p = add("basis", cmd_basis, "monomial basis of a weight space", ("text", "json", "csv"))
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--weight", help='per-direction groups, e.g. "0;0,0" or "2,0,0"')

    p = add("matrix", cmd_matrix, "stacked raising matrix", ("paper", "text", "json", "csv"))  # "paper" and "text" both give the dot grid
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("invariants", cmd_invariants, "basis of invariant polynomials")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--method", choices=("gauss", "bareiss"), default="gauss")
    p.add_argument("--timings", action="store_true", help="include timings in JSON output")

    p = add("dims", cmd_dims, "weight space dimensions")
    p.add_argument("--shape", type=_shape, default=Shape((2, 2, 2)))
    p.add_argument("--degree-range", type=_range, default=range(0, 21))
    p.add_argument("--check", action="store_true", help="compare with enumeration")

    p = add("altsum", cmd_altsum, "alternating sum of cube weight space dimensions")
    p.add_argument("--degree-range", type=_range, default=range(2, 41))
    p.add_argument("--kernel", action="store_true", help="also compute the kernel dimension")

    p = add("verify", cmd_verify, "check invariance of a polynomial JSON file")
    p.add_argument("--poly", required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    p = add("conjecture", cmd_conjecture, "fit zero-weight counts by polynomials")
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--period", type=int)

    p = add("subspace-check", cmd_subspace_check, "inclusion-exclusion for subspaces")
    p.add_argument("--degree", type=int, default=4, help="weight cube degree")
    p.add_argument("--input", help="JSON file {ambient_dim, subspaces: [[vector, ...], ...]}")

    for p in sub.choices.values():
        p.add_argument("--cap", type=int, default=None, help="column cap (default $HYPERINV_COLUMN_CAP or 20000)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None:
        args.cap = column_cap()
    if getattr(args, "degree", 0) is not None and getattr(args, "degree", 0) < 0:
        parser.error("degree must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hyperinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ColumnCapExceeded as exc:
        print(f"hyperinv: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"hyperinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
