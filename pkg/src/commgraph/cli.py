"""``smg``: command-line front end.

Exit codes: 0 success, 1 a check found failures, 2 bad input or usage.
Output paths accept ``-`` for stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .commuting import commuting_graph, extended_commuting_graph, knit_degree, star_knit_degree
from .constructions import DEFAULT_PRODUCT_CAP, ConstructionSpec
from .errors import SmgError
from .invariants import DEFAULT_CHI_CAP, DEFAULT_CLIQUE_CAP, invariant_report
from .semigroup import FAMILIES, generate, read_semigroup, serialize_semigroup, write_semigroup
from .verify import check_construction, enumerate_semigroups, run_corpus_suite

GRAMMAR = """\
  smg validate FILE
  smg gen --family F --order N -o FILE
  smg graph FILE [--extended] (--dot PATH|- | --json)
  smg invariants FILE [--extended]
  smg knit FILE [--star]
  smg construct (--zero-union|--product) FILES... -o FILE
  smg check (--zero-union|--product) FILES...
  smg enumerate --order N [--sample COUNT --seed S] [--check both] [-o DIR]
global: --clique-cap N --chi-cap N --product-cap N"""

CHECK_KINDS = {"zero-union": ("zero_union",), "product": ("direct_product",),
               "both": ("zero_union", "direct_product")}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\nusage forms:\n{GRAMMAR}\n")
        sys.exit(2)


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("SMG_SEED", "0"))


def _kind(args) -> str:
    return "zero_union" if args.zero_union else "direct_product"


def cmd_validate(args) -> int:
    s = read_semigroup(args.file)
    print(f"ok: order {len(s)}, center size {len(s.center)}, "
          f"{'commutative' if s.is_commutative else 'non-commutative'}")
    return 0


def cmd_gen(args) -> int:
    s = generate(args.family, args.order)
    _emit(serialize_semigroup(s) + "\n", args.output)
    return 0


def cmd_graph(args) -> int:
    s = read_semigroup(args.file)
    g = extended_commuting_graph(s) if args.extended else commuting_graph(s)
    if args.json:
        _emit(_dump(g.to_json()), "-")
    else:
        _emit(g.to_dot("Gstar" if args.extended else "G"), args.dot)
    return 0


def cmd_invariants(args) -> int:
    s = read_semigroup(args.file)
    g = extended_commuting_graph(s) if args.extended else commuting_graph(s)
    out = {"vertices": len(g), "edges": g.edge_count}
    out.update(invariant_report(g, args.clique_cap, args.chi_cap).to_json())
    _emit(_dump(out), "-")
    return 0


def cmd_knit(args) -> int:
    s = read_semigroup(args.file)
    res = star_knit_degree(s) if args.star else knit_degree(s)
    _emit(_dump(res.to_json()), "-")
    return 0


def cmd_construct(args) -> int:
    comps = [read_semigroup(f) for f in args.files]
    s = ConstructionSpec(_kind(args), comps).build(product_cap=args.product_cap)
    _emit(serialize_semigroup(s) + "\n", args.output)
    return 0


def cmd_check(args) -> int:
    comps = [read_semigroup(f) for f in args.files]
    report = check_construction(
        ConstructionSpec(_kind(args), comps),
        component_ids=[str(f) for f in args.files],
        clique_cap=args.clique_cap, chi_cap=args.chi_cap, product_cap=args.product_cap,
    )
    _emit(_dump(report.to_json()), "-")
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    seed = _seed(args)
    if args.sample is not None:
        found = list(enumerate_semigroups(args.order, "sampled", seed=seed, count=args.sample))
    else:
        found = list(enumerate_semigroups(args.order))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for i, s in enumerate(found):
            write_semigroup(s, out / f"o{args.order}_{i:04d}.smg")
    summary = {"order": args.order, "count": len(found), "seed": seed if args.sample is not None else None}
    code = 0
    if args.check:
        suite = run_corpus_suite(
            {args.order}, pair_cap=args.pair_cap, seed=seed, kinds=CHECK_KINDS[args.check],
            triples=args.triples, clique_cap=args.clique_cap, chi_cap=args.chi_cap,
            product_cap=args.product_cap, workers=args.workers,
            sample_count=args.sample if args.sample is not None else 20,
        )
        summary["check"] = suite
        code = 1 if suite["failed"] else 0
    _emit(_dump(summary), "-")
    return code


def _caps(p: argparse.ArgumentParser, default) -> None:
    p.add_argument("--clique-cap", type=int, default=default(DEFAULT_CLIQUE_CAP),
                   help="largest graph for exact clique search")
    p.add_argument("--chi-cap", type=int, default=default(DEFAULT_CHI_CAP),
                   help="largest graph for exact colouring")
    p.add_argument("--product-cap", type=int, default=default(DEFAULT_PRODUCT_CAP),
                   help="largest construction order")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smg", description="Commuting graphs of finite semigroups.",
                     epilog="usage forms:\n" + GRAMMAR,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    _caps(parser, lambda v: v)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        # caps are accepted after the subcommand too
        _caps(p, lambda v: argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = command("validate", cmd_validate, "parse a table file and check associativity")
    p.add_argument("file")

    p = command("gen", cmd_gen, "write a named semigroup family member")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--order", required=True, type=int,
                   help="family parameter (the degree for full_transformation)")
    p.add_argument("-o", "--output", required=True)

    p = command("graph", cmd_graph, "commuting graph as DOT or JSON")
    p.add_argument("file")
    p.add_argument("--extended", action="store_true", help="use all elements, centre included")
    fmt = p.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", metavar="PATH")
    fmt.add_argument("--json", action="store_true")

    p = command("invariants", cmd_invariants, "diameter, girth, clique and chromatic numbers")
    p.add_argument("file")
    p.add_argument("--extended", action="store_true")

    p = command("knit", cmd_knit, "knit degree with a witness path")
    p.add_argument("file")
    p.add_argument("--star", action="store_true", help="search the extended graph")

    for name, func, text in (("construct", cmd_construct, "build a zero-union or direct product"),
                             ("check", cmd_check, "compare predictions against direct computation")):
        p = command(name, func, text)
        kind = p.add_mutually_exclusive_group(required=True)
        kind.add_argument("--zero-union", action="store_true")
        kind.add_argument("--product", action="store_true")
        p.add_argument("files", nargs="+")
        if name == "construct":
            p.add_argument("-o", "--output", required=True)

    p = command("enumerate", cmd_enumerate, "enumerate small semigroups, optionally checking pairs")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--sample", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, help="defaults to $SMG_SEED, then 0")
    p.add_argument("--check", choices=sorted(CHECK_KINDS))
    p.add_argument("--pair-cap", type=int, help="seeded sample size for pairs per construction")
    p.add_argument("--triples", type=int, default=0, help="seeded triples per construction")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", metavar="DIR", help="write each table to DIR")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SmgError, OSError) as exc:
        print(f"smg {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
