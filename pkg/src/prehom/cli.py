"""Command-line front end.

Exit status: 0 on success, 2 on invalid input, 3 when an internal
invariant breaks (a bug, never caused by input).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .castling import enumerate_tree, equivalent, minimize
from .classifier import classify, residue_obstruction_check, scan
from .errors import InternalInvariantError
from .kac import kac_decompose
from .oracle import DEFAULT_MAX_DIM, cross_check_rows, default_prime, default_trials, orbit_rank
from .report import emit, to_json
from .tuples import invariant_n, parse_tuple


def _cmd_invariant(args):
    return f"{invariant_n(parse_tuple(args.tuple))}\n"


def _cmd_classify(args):
    return emit(classify(parse_tuple(args.tuple)), args.format)


def _cmd_minimize(args):
    return emit(minimize(parse_tuple(args.tuple)), args.format)


def _cmd_equiv(args):
    t1, t2 = parse_tuple(args.t1), parse_tuple(args.t2)
    same = equivalent(t1, t2)
    if args.format == "json":
        m1 = minimize(t1).terminal
        m2 = minimize(t2).terminal
        return to_json({"equivalent": same, "minimal": [list(m1), list(m2)]})
    return f"{str(same).lower()}\n"


def _cmd_tree(args):
    root = enumerate_tree(parse_tuple(args.tuple), args.max_dim, args.max_depth, dedup_global=args.dedup)
    return emit(root, args.format)


def _cmd_kac(args):
    return emit(kac_decompose(args.a, args.b, args.c), args.format)


def _cmd_oracle(args):
    rep = orbit_rank(parse_tuple(args.tuple), args.prime, args.trials, args.seed, args.max_dim)
    return emit(rep, args.format)


def _cmd_scan(args):
    if args.n < 3 or args.max < 1:
        raise ValueError("scan needs --n >= 3 and --max >= 1")
    rows = scan(args.n, args.max)
    if args.cross_check:
        rows = list(cross_check_rows((r.input for r in rows), args.prime, args.trials, args.seed, args.max_dim))
    return emit(rows, args.format)


def _cmd_residues(args):
    if args.max < 1:
        raise ValueError("--max must be >= 1")
    return to_json(residue_obstruction_check(args.max))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prehom", description="Prehomogeneity of tensor spaces C^a1 x ... x C^an.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def oracle_flags(sp):
        sp.add_argument("--prime", type=int, default=default_prime(), help="prime modulus (env PREHOM_PRIME)")
        sp.add_argument("--trials", type=int, default=default_trials(), help="random tensors per prime (env PREHOM_TRIALS)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="largest dim_v the oracle accepts")

    sp = sub.add_parser("invariant", help="print N")
    sp.add_argument("tuple")
    sp.set_defaults(func=_cmd_invariant)

    sp = sub.add_parser("classify", help="prehomogeneity verdict")
    sp.add_argument("tuple")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("minimize", help="descent trace to the minimal tuple")
    sp.add_argument("tuple")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_minimize)

    sp = sub.add_parser("equiv", help="castling-equivalence test")
    sp.add_argument("t1")
    sp.add_argument("t2")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_equiv)

    sp = sub.add_parser("tree", help="castling tree")
    sp.add_argument("tuple")
    sp.add_argument("--max-dim", type=int, required=True)
    sp.add_argument("--max-depth", type=int, required=True)
    sp.add_argument("--dedup", action="store_true", help="drop tuples seen anywhere in the tree")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    sp.set_defaults(func=_cmd_tree)

    sp = sub.add_parser("kac", help="Fibonacci-block decomposition of (a,b,c)")
    for name in ("a", "b", "c"):
        sp.add_argument(name, type=int)
    sp.add_argument("--format", choices=("json", "pattern"), default="json")
    sp.set_defaults(func=_cmd_kac)

    sp = sub.add_parser("oracle", help="orbit-rank check over a prime field")
    sp.add_argument("tuple")
    oracle_flags(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("scan", help="classify all tuples with entries in [1, max]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--cross-check", action="store_true", help="also run the oracle on every row")
    oracle_flags(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("residues", help="check N mod 9 on all triples with entries <= max")
    sp.add_argument("--max", type=int, required=True)
    sp.set_defaults(func=_cmd_residues)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except InternalInvariantError as exc:
        print(f"prehom: internal error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"prehom: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
