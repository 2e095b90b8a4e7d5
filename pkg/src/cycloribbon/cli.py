"""Command line front end.

Data goes to stdout as JSON (or CSV for the matrix commands);
diagnostics go to stderr.  Exit codes: 0 success, 1 argument or literal
validation error, 2 oracle check failure (with a JSON counterexample on
stderr).  Output is deterministic byte for byte for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import hopf, lincomb, oracle, reptheory, ribbons

MAX_DIM_ENV = "CYCLORIBBON_MAX_DIM"
DEFAULT_MAX_DIM = 2000


def _ribbon_json(rib):
    return {"shape": list(rib.shape), "colors": list(rib.colors)}


def _emit(obj) -> int:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _check_sizes(args, min_n=0) -> None:
    if getattr(args, "n", min_n) < min_n:
        raise ValueError(f"--n must be at least {min_n}")
    if getattr(args, "r", 1) < 1:
        raise ValueError("--r must be at least 1")


def cmd_enumerate(args) -> int:
    _check_sizes(args)
    enum = (ribbons.enumerate_anticycloribbons if args.anti
            else ribbons.enumerate_cycloribbons)
    shape = ribbons.parse_composition(args.shape) if args.shape else None
    ribs = enum(args.n, args.r, shape=shape)
    return _emit({"n": args.n, "r": args.r,
                  "shape": list(shape) if shape else None,
                  "anti": bool(args.anti),
                  "count": len(ribs),
                  "ribbons": [_ribbon_json(x) for x in ribs]})


def cmd_phi(args) -> int:
    rib = ribbons.parse_ribbon(args.ribbon)
    return _emit({"input": _ribbon_json(rib),
                  "output": _ribbon_json(ribbons.flip_ribbon(rib))})


def _parse_elt(basis: str, text: str) -> lincomb.LinComb:
    if basis == "F":
        return lincomb.LinComb.single(lincomb.QMR_F, ribbons.parse_ribbon(text))
    label = ribbons.parse_colored_composition(text)
    tag = lincomb.MR_R if basis == "R" else lincomb.MR_S
    return lincomb.LinComb.single(tag, label)


def cmd_product(args) -> int:
    lhs = _parse_elt(args.basis, args.lhs)
    rhs = _parse_elt(args.basis, args.rhs)
    mul = {"F": hopf.qmr_product_F, "R": hopf.mr_product_R,
           "S": hopf.mr_product_S}[args.basis]
    return _emit(lincomb.lincomb_to_json(mul(lhs, rhs)))


def cmd_coproduct(args) -> int:
    elt = _parse_elt(args.basis, args.elt)
    cop = hopf.qmr_coproduct_F if args.basis == "F" else hopf.mr_coproduct
    return _emit(lincomb.tensorcomb_to_json(cop(elt)))


def cmd_induce_simples(args) -> int:
    lhs = ribbons.parse_ribbon(args.lhs)
    rhs = ribbons.parse_ribbon(args.rhs)
    for rib, side in ((lhs, "--lhs"), (rhs, "--rhs")):
        if not ribbons.is_cycloribbon(rib):
            raise ValueError(f"{side}: {ribbons.ribbon_literal(rib)} is not a cycloribbon")
    prod = hopf.qmr_product_F(
        lincomb.LinComb.single(lincomb.QMR_F, lhs),
        lincomb.LinComb.single(lincomb.QMR_F, rhs))
    return _emit(lincomb.lincomb_to_json(prod))


def cmd_induce_hecke_projective(args) -> int:
    _check_sizes(args)
    shape = ribbons.parse_composition(args.shape)
    summands = reptheory.induce_hecke_projective(shape, args.r)
    return _emit({"shape": list(shape), "r": args.r,
                  "summands": [{"label": ribbons.colored_composition_literal(cc),
                                "parts": list(cc.parts),
                                "colors": list(cc.colors),
                                "dim": dim}
                               for cc, dim in summands],
                  "total_dim": sum(d for _, d in summands)})


def _emit_matrix(matrix, row_fmt, col_fmt, args, extra) -> int:
    if args.format == "csv":
        sys.stdout.write(matrix.to_csv(row_fmt, col_fmt))
        return 0
    out = {"n": args.n, "r": args.r, **extra,
           **matrix.to_json_dict(row_fmt, col_fmt)}
    return _emit(out)


def cmd_cartan(args) -> int:
    _check_sizes(args)
    matrix = reptheory.cartan_matrix(args.n, args.r)
    return _emit_matrix(matrix, ribbons.colored_composition_literal,
                        ribbons.ribbon_literal, args, {"matrix": "cartan"})


def cmd_decomp(args) -> int:
    _check_sizes(args)
    matrix = reptheory.decomposition_matrix(args.n, args.r)
    return _emit_matrix(matrix, ribbons.multipartition_literal,
                        ribbons.ribbon_literal, args, {"matrix": "decomposition"})


def cmd_dims(args) -> int:
    _check_sizes(args)
    labels = reptheory.projective_labels(args.n, args.r)
    dims = [(cc, reptheory.dim_projective(cc)) for cc in labels]
    return _emit({"n": args.n, "r": args.r,
                  "projectives": [{"label": ribbons.colored_composition_literal(cc),
                                   "dim": d} for cc, d in dims],
                  "sum": sum(d for _, d in dims),
                  "algebra_dim": args.r ** args.n * math.factorial(args.n)})


def _max_dim() -> int:
    raw = os.environ.get(MAX_DIM_ENV)
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_DIM_ENV} must be an integer, got {raw!r}")


def cmd_oracle_verify(args) -> int:
    _check_sizes(args, min_n=1)
    u = None
    if args.u:
        u = tuple(Fraction(piece) for piece in args.u.split(","))
    params = oracle.AlgebraParams(args.n, args.r, u or ())
    cap = _max_dim()
    if params.dimension > cap:
        raise ValueError(
            f"instance dimension {params.dimension} exceeds the cap {cap} "
            f"(set {MAX_DIM_ENV} to raise it)")
    checks = oracle.verify_relations(params)
    ok = all(c["pass"] for c in checks)
    _emit({"n": args.n, "r": args.r,
           "u": [str(x) for x in params.u],
           "checks": checks, "pass": ok})
    if not ok:
        json.dump([c for c in checks if not c["pass"]], sys.stderr)
        sys.stderr.write("\n")
        return 2
    return 0


def cmd_oracle_cross_check(args) -> int:
    cap = _max_dim()
    dim = args.r ** args.max_grade * math.factorial(args.max_grade)
    if dim > cap:
        raise ValueError(
            f"largest instance dimension {dim} exceeds the cap {cap} "
            f"(set {MAX_DIM_ENV} to raise it)")
    report = oracle.cross_check_induction(args.r, args.max_grade)
    _emit(report)
    if not report["pass"]:
        json.dump(report["failures"][:3], sys.stderr)
        sys.stderr.write("\n")
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloribbon",
        description="colored ribbon combinatorics and module bookkeeping "
                    "for the colored 0-Hecke algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list cycloribbons or anticycloribbons")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--shape", help="composition literal, e.g. 2,1")
    p.add_argument("--anti", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("phi", help="apply the flip involution to a ribbon")
    p.add_argument("--ribbon", required=True, help='literal "shape|colors"')
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("product", help="multiply two basis elements")
    p.add_argument("--basis", choices=["F", "R", "S"], required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coproduct", help="coproduct of a basis element")
    p.add_argument("--basis", choices=["F", "R", "S"], required=True)
    p.add_argument("--elt", required=True)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("induce-simples",
                       help="composition factors of an induction product")
    p.add_argument("--lhs", required=True, help='cycloribbon "shape|colors"')
    p.add_argument("--rhs", required=True, help='cycloribbon "shape|colors"')
    p.set_defaults(func=cmd_induce_simples)

    p = sub.add_parser("induce-hecke-projective",
                       help="induce a colorless projective module")
    p.add_argument("--shape", required=True, help="composition literal")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_induce_hecke_projective)

    for name, fn in (("cartan", cmd_cartan), ("decomp", cmd_decomp)):
        p = sub.add_parser(name, help=f"{name} matrix")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--format", choices=["csv", "json"], default="json")
        p.set_defaults(func=fn)

    p = sub.add_parser("dims", help="dimensions of the projectives")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("oracle", help="structure-constant checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("verify", help="check the defining relations")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--u", help='comma separated parameters, e.g. "1,3,7"')
    q.set_defaults(func=cmd_oracle_verify)
    q = osub.add_parser("cross-check",
                        help="combinatorial vs explicit induction products")
    q.add_argument("--max-grade", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.set_defaults(func=cmd_oracle_cross_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, oracle.OracleError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
