"""Command-line interface.

Exit codes: 0 success, 1 negative answer under --strict (or a failed
verification), 2 usage error, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .construct import construct, format_map, verify_witness, write_bundle
from . import random_model as rm
from .graph import ACYCLIC, GraphError, girth, read_odg, serialize, to_dot
from .hom import find_homomorphism
from .tournaments import MAX_CATALOG_ORDER, enumerate_tournaments, load_catalog_cache, oriented_chromatic_number, save_catalog_cache

EXIT_NEGATIVE = 1
EXIT_INVALID = 3


def _negative(args) -> int:
    return EXIT_NEGATIVE if args.strict else 0


def cmd_girth(args, out):
    g = girth(read_odg(args.file))
    if g == ACYCLIC:
        print("acyclic", file=out)
        return _negative(args)
    print(g, file=out)
    return 0


def cmd_chi(args, out):
    chi = oriented_chromatic_number(read_odg(args.file), cap=args.cap)
    if chi is None:
        print("exceeds-cap", file=out)
        return _negative(args)
    print(chi, file=out)
    return 0


def cmd_hom(args, out):
    h = find_homomorphism(read_odg(args.source), read_odg(args.target))
    if h is None:
        print("none", file=out)
        return _negative(args)
    out.write(format_map(h))
    return 0


def cmd_dot(args, out):
    out.write(to_dot(read_odg(args.file)))
    return 0


def cmd_construct(args, out):
    w = construct(args.k, args.l)
    if args.out:
        write_bundle(args.out, w)
    else:
        out.write(f"# graph girth={w.claimed_girth} chi={w.claimed_chi}\n")
        out.write(serialize(w.graph))
        out.write("# target\n")
        out.write(serialize(w.target))
        out.write(format_map(w.colouring))
    if args.verify:
        report = verify_witness(w, check_chi=w.claimed_chi <= MAX_CATALOG_ORDER)
        print(report, file=sys.stderr)
        if not report.ok:
            print("verification failed", file=out)
            return EXIT_NEGATIVE
        print("verified", file=out)
    return 0


def _params(args) -> rm.SampleParams:
    return rm.SampleParams(read_odg(args.base), args.n, args.l, args.eps, args.k, args.seed)


def cmd_sample(args, out):
    outcome = rm.run_pipeline(_params(args))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "dstar.odg"), "w") as fh:
            fh.write(serialize(outcome.d_star))
        with open(os.path.join(args.out, "psi.txt"), "w") as fh:
            fh.write(format_map(outcome.psi))
    else:
        out.write(serialize(outcome.d_star))
        out.write(format_map(outcome.psi))
    print(
        f"sampled arcs {outcome.sampled_arcs}, short cycles {outcome.short_cycle_count}, "
        f"removed {len(outcome.removed)}, matching {outcome.matching_achieved}",
        file=sys.stderr,
    )
    return 0


def cmd_experiment(args, out):
    params = _params(args)
    if args.which == "lemma1":
        report = rm.lemma1_experiment(params, args.trials)
    elif args.which == "lemma2":
        report = rm.lemma2_experiment(params, args.trials)
    elif args.which == "lemma3":
        report = rm.lemma3_experiment(params, args.trials, args.pairs)
    else:
        report = rm.theorem1_demo(params, args.trials, args.hom_limit)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = [name for name, ok in report["pass"].items() if ok is False]
    if failed:
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return _negative(args)
    return 0


def cmd_tournaments(args, out):
    if args.cache:
        load_catalog_cache(args.cache)
    catalog = enumerate_tournaments(args.k)
    print(len(catalog), file=out)
    if args.codes:
        for code in catalog.codes:
            print(f"{args.k}:{code:x}", file=out)
    if args.cache and not os.path.exists(args.cache):
        save_catalog_cache(args.cache, args.k)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true", help="exit 1 on negative answers")

    parser = argparse.ArgumentParser(prog="oriented-girth", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("girth", parents=[common], help="girth of an ODG file")
    p.add_argument("file")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("chi", parents=[common], help="oriented chromatic number")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=MAX_CATALOG_ORDER)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("hom", parents=[common], help="find a homomorphism D -> C")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("dot", parents=[common], help="export an ODG file as DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("construct", parents=[common], help="graph with given girth and chromatic number")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", help="bundle directory (default: stdout)")
    p.set_defaults(func=cmd_construct)

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--base", required=True)
    model.add_argument("--n", type=int, required=True)
    model.add_argument("--l", type=int, required=True)
    model.add_argument("--eps", type=float)
    model.add_argument("--k", type=int)
    model.add_argument("--seed", type=int, required=True)
    model.add_argument("--out")

    p = sub.add_parser("sample", parents=[common, model], help="run the random pipeline once")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("experiment", parents=[common, model], help="Monte Carlo experiment, JSON report")
    p.add_argument("which", choices=["lemma1", "lemma2", "lemma3", "theorem1"])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--pairs", type=int, default=20, help="(A, B) samples per trial for lemma3")
    p.add_argument("--hom-limit", type=int, default=8, help="homomorphisms checked per target for theorem1")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("tournaments", parents=[common], help="tournament catalog size")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--codes", action="store_true")
    p.add_argument("--cache", help="catalog cache file, read if present, written otherwise")
    p.set_defaults(func=cmd_tournaments)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
