"""Command-line front end: ``comax <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 resource limit, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import harness
from .classes import classify
from .comaxgraph import build_comax_graph, export_dot, export_json
from .errors import (
    InvalidParameter,
    OutOfScope,
    ResourceLimit,
    SpecSemanticError,
    SpecSyntaxError,
)
from .lattice import DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_CAP, LatticeCache, all_subgroups
from .spec import realize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4
DEFAULT_CACHE = Path.home() / ".cache" / "comax"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _suite(text: str) -> str:
    name = harness.SUITE_ALIASES.get(text, text)
    if name not in harness.SUITES:
        raise argparse.ArgumentTypeError(f"unknown suite {text!r}; choose from {', '.join(harness.SUITES)}")
    return name


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order-cap", type=_positive, default=DEFAULT_ORDER_CAP)
    p.add_argument("--subgroup-cap", type=_positive, default=DEFAULT_SUBGROUP_CAP)
    p.add_argument("--cache-dir", help="lattice cache directory (default: $COMAX_CACHE_DIR or ~/.cache/comax)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the lattice cache")
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes for sweeps")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="comax", description="Co-maximal subgroup graphs of finite groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("subgroups", parents=[common], help="list every subgroup")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("graph", parents=[common], help="dump the co-maximal subgroup graph")
    p.add_argument("spec")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", parents=[common], help="graph class verdicts with witnesses")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", type=_suite, metavar="{" + ",".join(harness.SUITES) + "}")
    p.add_argument("--max", type=_positive, dest="max_n", help="largest n (dihedral) or m (dicyclic)")
    p.add_argument("--max-order", type=_positive, help="largest group order (abelian)")
    p.add_argument("--max-n", type=_positive, dest="max_q", help="largest n for Q_(2^n) (quaternion suite)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cache", parents=[common], help="manage the lattice cache")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    w = csub.add_parser("warm", parents=[common], help="precompute lattices for a suite")
    w.add_argument("suite", type=_suite, metavar="{" + ",".join(harness.SUITES) + "}")
    w.add_argument("--max", type=_positive, dest="max_n")
    w.add_argument("--max-order", type=_positive)
    w.add_argument("--max-n", type=_positive, dest="max_q")
    csub.add_parser("clear", parents=[common], help="delete every cached lattice")
    csub.add_parser("stat", parents=[common], help="entry count and total bytes")
    return ap


def _cache(args) -> LatticeCache | None:
    if args.no_cache:
        return None
    path = args.cache_dir or os.environ.get("COMAX_CACHE_DIR") or DEFAULT_CACHE
    return LatticeCache(path)


def _lattice(args, g):
    caps = dict(order_cap=args.order_cap, subgroup_cap=args.subgroup_cap)
    cache = _cache(args)
    if cache is None:
        return all_subgroups(g, **caps)
    return cache.get_or_compute(g, **caps)


def _group(args):
    return realize(args.spec, cap=args.order_cap)


def cmd_subgroups(args, out) -> int:
    g = _group(args)
    lat = _lattice(args, g)
    if args.json:
        doc = {
            "group": g.name,
            "order": g.order,
            "subgroups": [
                {"order": s.order, "elements": s.elements(), "maximal": m}
                for s, m in zip(lat.subgroups, lat.maximal)
            ],
        }
        out.write(json.dumps(doc) + "\n")
    else:
        for s in lat.subgroups:
            out.write(f"{s.order}: {{{', '.join(map(str, s.elements()))}}}\n")
    return EXIT_OK


def cmd_graph(args, out) -> int:
    g = _group(args)
    graph = build_comax_graph(g, _lattice(args, g))
    if args.json:
        out.write(export_json(graph))
    elif args.dot:
        out.write(export_dot(graph))
    else:
        out.write(f"{graph.n} {len(graph.edges())}\n")
        for i, label in enumerate(graph.labels()):
            out.write(f"# v{i} {label}\n")
        for u, v in graph.edges():
            out.write(f"{u} {v}\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    g = _group(args)
    graph = build_comax_graph(g, _lattice(args, g))
    report = classify(graph.as_simple())
    labels = graph.labels()
    if args.json:
        doc = {
            "group": g.name,
            "vertices": graph.n,
            "edges": len(graph.edges()),
            "classes": {
                c: {
                    "member": v,
                    "witness": None if report.witnesses.get(c) is None else {
                        "pattern": report.witnesses[c].pattern,
                        "vertices": [labels[i] for i in report.witnesses[c].mapping],
                    },
                }
                for c, v in report.verdicts.items()
            },
        }
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    out.write(f"{g.name}: {graph.n} vertices, {len(graph.edges())} edges\n")
    for c, v in report.verdicts.items():
        line = f"{c.replace('_', '-')}: {'yes' if v else 'no'}"
        w = report.witnesses.get(c)
        if w is not None:
            line += f" [witness: {w.pattern} on " + ", ".join(labels[i] for i in w.mapping) + "]"
        out.write(line + "\n")
    return EXIT_OK


def _config(args) -> harness.SweepConfig:
    cache = _cache(args)
    return harness.SweepConfig(
        order_cap=args.order_cap,
        subgroup_cap=args.subgroup_cap,
        cache_dir=None if cache is None else str(cache.path),
        jobs=args.jobs or harness.default_jobs(),
    )


def cmd_verify(args, out) -> int:
    records = harness.run_suite(args.suite, _config(args), args.max_n, args.max_order, args.max_q)
    if args.json:
        out.write(harness.report_json(records, args.suite))
    else:
        out.write(harness.report_text(records, args.suite))
    summary = harness.summarize(records)
    if summary["mismatched"]:
        return EXIT_MISMATCH
    if summary["errored"]:
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_cache(args, out) -> int:
    cache = _cache(args) or LatticeCache(DEFAULT_CACHE)
    if args.action == "clear":
        n = cache.clear()
        out.write(f"removed {n} entries from {cache.path}\n")
    elif args.action == "stat":
        n, size = cache.stat()
        out.write(f"{cache.path}: {n} entries, {size} bytes\n")
    else:
        specs = harness.suite_specs(args.suite, args.max_n, args.max_order, args.max_q)
        caps = dict(order_cap=args.order_cap, subgroup_cap=args.subgroup_cap)
        failed = 0
        for text in specs:
            try:
                cache.get_or_compute(realize(text, cap=args.order_cap), **caps)
            except ResourceLimit as exc:
                failed += 1
                print(f"comax: skipped {text}: {exc}", file=sys.stderr)
        out.write(f"warmed {len(specs) - failed} lattices in {cache.path}\n")
        if failed:
            return EXIT_RESOURCE
    return EXIT_OK


COMMANDS = {
    "subgroups": cmd_subgroups,
    "graph": cmd_graph,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "cache": cmd_cache,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (SpecSyntaxError, SpecSemanticError, InvalidParameter, OutOfScope) as exc:
        print(f"comax: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"comax: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"comax: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
