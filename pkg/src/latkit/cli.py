"""Command-line front end: ``latkit <command> ...``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage,
parse or input errors.
"""

import argparse
import json
import sys
from math import gcd

from .a2 import A2Vector, a2_report, check_exhaustive_range
from .core import disc, invariants, signature
from .discform import same_genus
from .dsl import lattice_from_text
from .embed import glue_data, saturate, transcendental_disc_candidates, unimodular_embedding_obstruction
from .errors import LatticeError
from .extend import Incompatible, extend_isometry
from .jsonio import dumps, load_extend_case
from .suite import SUITES, run_suite


def _vectors(text):
    """"1,1;1,-1" -> [[1, 1], [1, -1]]."""
    try:
        return [[int(x) for x in part.split(",")] for part in text.split(";") if part.strip()]
    except ValueError:
        raise LatticeError(f"cannot read vectors from {text!r}; use e.g. '1,0;0,1'") from None


def _emit(args, payload, text):
    print(dumps(payload) if args.json else text)


def cmd_disc(args):
    lat = lattice_from_text(args.expr)
    _emit(args, invariants(lat), str(disc(lat)))
    return 0


def cmd_sig(args):
    pos, neg = signature(lattice_from_text(args.expr))
    _emit(args, {"signature": [pos, neg]}, f"({pos},{neg})")
    return 0


def cmd_genus_eq(args):
    answer = same_genus(lattice_from_text(args.first), lattice_from_text(args.second))
    _emit(args, {"same_genus": str(answer)}, str(answer))
    return 0


def cmd_glue(args):
    lat = lattice_from_text(args.expr)
    glue = glue_data(lat, saturate(lat, _vectors(args.span)))
    payload = {
        "order": glue.order,
        "orders": list(glue.orders),
        "sublattice_basis": [list(r) for r in glue.sub.basis],
        "complement_basis": [list(r) for r in glue.complement.basis],
        "generators": [list(g) for g in glue.generators],
        "disc_sub": glue.disc_sub.to_json(),
        "disc_complement": glue.disc_complement.to_json(),
    }
    text = [f"glue order: {glue.order}",
            f"sublattice basis: {payload['sublattice_basis']}",
            f"complement basis: {payload['complement_basis']}"]
    if glue.generators:
        text.append(f"glue generators: {payload['generators']}")
    _emit(args, payload, "\n".join(text))
    return 0


def cmd_obstruct(args):
    lat = lattice_from_text(args.expr)
    result = unimodular_embedding_obstruction(lat, args.scale, args.ambient_rank)
    _emit(args, {"result": result}, result)
    return 0


def cmd_a2(args):
    if args.vector is not None:
        vecs = _vectors(args.vector)
        if len(vecs) != 1 or len(vecs[0]) != 2:
            raise LatticeError(f"--vector expects two integers a,b, got {args.vector!r}")
        a, b = vecs[0]
        if a == 0 and b == 0:
            raise LatticeError("the zero vector has no orthogonal complement of rank 1")
        k = gcd(a, b)
        report = a2_report(A2Vector(a // k, b // k))
        if k != 1:
            report["content"] = k
        _emit(args, report, f"u = ({report['u'][0]},{report['u'][1]}), u² = {report['u_squared']}, "
                            f"branch {report['branch']}")
        return 0
    summary = check_exhaustive_range(args.bound)
    _emit(args, summary, f"checked {summary['vectors']} primitive vectors with |a|,|b| <= {args.bound}: "
                         + ("all agree" if summary["ok"] else f"mismatch at {summary['witness']}"))
    return 0 if summary["ok"] else 1


def cmd_candidates(args):
    found = sorted(transcendental_disc_candidates(args.prime, args.glue))
    _emit(args, {"candidates": found}, " ".join(map(str, found)))
    return 0


def cmd_extend(args):
    try:
        with open(args.case, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise LatticeError(f"cannot read case file: {exc}") from None
    try:
        split, split2, f, g = load_extend_case(data)
    except KeyError as exc:
        raise LatticeError(f"case file is missing field {exc}") from None
    result = extend_isometry(split, split2, f, g)
    if isinstance(result, Incompatible):
        _emit(args, {"extends": False, "witness": result.witness},
              f"incompatible: glue generator {result.witness['generator']} goes to "
              f"{result.witness['image_via_g']} under g but {result.witness['image_via_f']} under f")
    else:
        matrix = [list(r) for r in result.matrix]
        _emit(args, {"extends": True, "matrix": matrix}, f"extends: h = {matrix}")
    return 0


def cmd_verify(args):
    if args.trials < 1:
        raise LatticeError("--trials must be positive")
    records, summary = run_suite(args.suite, args.seed, args.trials)
    if args.json:
        for rec in records:
            print(dumps(rec))
        print(dumps(summary))
    else:
        for rec in records:
            print(f"{rec['status']:<16} {rec['check_id']}")
            if rec["status"] == "fail":
                print(f"  witness: {dumps(rec.get('witness'))}")
        print(f"suite {summary['suite']}, seed {summary['seed']}, trials {summary['trials']}: "
              f"{summary['checks'] - summary['failed']}/{summary['checks']} ok")
    return 1 if summary["failed"] else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="latkit", description="Exact computations with integral lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disc", parents=[common], help="discriminant |det| of a lattice expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("sig", parents=[common], help="signature (positive, negative)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("genus-eq", parents=[common], help="same signature, parity and discriminant form?")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_genus_eq)

    p = sub.add_parser("glue", parents=[common], help="glue group of the saturated span")
    p.add_argument("expr")
    p.add_argument("--span", required=True, help="vectors like '1,1;1,-1'")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("obstruct", parents=[common], help="length obstruction for L(n) in a unimodular lattice")
    p.add_argument("expr")
    p.add_argument("--scale", type=int, required=True)
    p.add_argument("--ambient-rank", type=int, required=True)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("a2", parents=[common], help="orthogonal complements of vectors in A2")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bound", type=int, help="check every primitive vector with |a|,|b| <= N")
    group.add_argument("--vector", help="a,b")
    p.set_defaults(func=cmd_a2)

    p = sub.add_parser("candidates", parents=[common], help="admissible disc(T) for prime p and glue order m")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--glue", type=int, required=True)
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("extend", parents=[common], help="extend f + g across the glue")
    p.add_argument("--case", required=True, help="JSON case file")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=500)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
