"""Command-line front end: solve, table, verify, construct, enumerate, classes."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructions import (
    CertifiedAssignment,
    excellent_from_coloring,
    extremal_bad_tree,
    greedy_good_cubic_bipartite,
    heawood,
    heawood_tower,
    heawood_tower_good,
    k23_chain,
)
from .enumeration import EnumerationError, GraphClassSpec
from .graph import GraphError, path_graph, petersen_graph, star_graph
from .graph6 import Graph6Error, emit_graph6, iter_graph6_lines, parse_graph6
from .solver import NICE, VARIANTS, SolveError, solve, solve_all
from .tables import default_workers, format_rows, table_rows
from .verify import compare_cubic_classes, verify_class

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3

INPUT_ERRORS = (Graph6Error, EnumerationError, GraphError, SolveError, ValueError, OSError)


class InputError(ValueError):
    pass


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive), ``a`` or a comma list ``a,b,c``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise InputError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad order range {text!r}; expected a..b, a or a,b,c") from None


def _orders(spec: GraphClassSpec, text: str | None) -> list[int]:
    if text is None:
        if spec.kind == "g6":
            return spec.orders() or []
        raise InputError(f"--n is required for class {spec.label()}")
    ns = parse_range(text)
    if spec.kind in ("cubic", "cubic3"):
        ns = [n for n in ns if n % 2 == 0 and n >= 4]
    elif spec.kind == "trees":
        ns = [n for n in ns if n >= 1]
    return ns


def _signs(witness) -> str:
    return "".join("+" if x > 0 else "-" for x in witness)


def _read_graphs(source: str):
    if source == "-":
        return list(iter_graph6_lines(sys.stdin))
    path = Path(source)
    if path.exists():
        with open(path, encoding="ascii", errors="replace") as fh:
            return list(iter_graph6_lines(fh))
    return [parse_graph6(source)]


# --- subcommands ----------------------------------------------------------------------


def cmd_solve(args) -> int:
    graphs = _read_graphs(args.input)
    if not graphs:
        raise InputError("no graphs in input")
    code = EXIT_OK
    for g in graphs:
        out = solve(g, args.variant)
        line = f"{emit_graph6(g)} {args.variant} status={out.status}"
        if out.optimal:
            line += f" value={out.value} witness={_signs(out.witness)}"
        else:
            code = EXIT_INFEASIBLE
        print(line + f" nodes={out.nodes_explored}")
    return code


def cmd_table(args) -> int:
    spec = GraphClassSpec.parse(args.graph_class)
    orders = _orders(spec, args.n)
    workers = args.workers if args.workers is not None else default_workers()
    if workers < 1:
        raise InputError("--workers must be at least 1")
    rows = []
    for row in table_rows(spec, args.variant, orders, workers, args.checkpoint, args.witnesses):
        rows.append(row)
    title = f"{args.variant} decision number over {spec.label()}"
    sys.stdout.write(format_rows(rows, args.format, title))
    return EXIT_OK


def _fault(solve_fn, shift: int):
    def corrupted(g):
        return {k: (v + shift if v is not None else None) for k, v in solve_fn(g).items()}

    return corrupted


def cmd_verify(args) -> int:
    spec = GraphClassSpec.parse(args.graph_class)
    solve_fn = _fault(solve_all, args.inject_fault) if args.inject_fault else solve_all
    report = verify_class(spec, _orders(spec, args.n), solve_fn)
    print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_classes(args) -> int:
    for cmp in compare_cubic_classes(parse_range(args.n)):
        print(cmp.line())
    return EXIT_OK


def _skeleton(text: str):
    for prefix, build in (("path", path_graph), ("star", star_graph)):
        if text.startswith(prefix) and text[len(prefix):].isdigit():
            return build(int(text[len(prefix):]))
    return parse_graph6(text)


def _positive(values: list[int], name: str, default: int | None = None) -> int:
    if not values:
        if default is None:
            raise InputError(f"{name} needs a positive integer parameter")
        return default
    if values[0] < 1:
        raise InputError(f"{name} parameter must be positive")
    return values[0]


def build_family(family: str, params: list[int], skeleton: str | None) -> tuple:
    """Return (graph, certified assignment or None) for a named family."""
    if family == "heawood":
        g = heawood()
        return g, greedy_good_cubic_bipartite(g)
    if family == "heawood-tower":
        level = _positive(params, family, 1)
        return heawood_tower(level), heawood_tower_good(level)
    if family == "k23-chain":
        g = k23_chain(_positive(params, family))
        out = solve(g, NICE)
        return g, CertifiedAssignment(g, NICE, out.witness, ">=", out.value)
    if family == "extremal-bad-tree":
        cert = extremal_bad_tree(_skeleton(skeleton or "path1"))
        return cert.graph, cert
    if family == "petersen":
        g = petersen_graph()
        return g, excellent_from_coloring(g)
    raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


FAMILIES = ("heawood", "heawood-tower", "k23-chain", "extremal-bad-tree", "petersen")


def cmd_construct(args) -> int:
    g, cert = build_family(args.family, args.params, args.skeleton)
    if args.variant:
        out = solve(g, args.variant)
        if not out.optimal:
            raise InputError(f"{args.variant} is infeasible on this graph")
        cert = CertifiedAssignment(g, VARIANTS[args.variant], out.witness, "==", out.value)
    line = emit_graph6(g)
    sidecar = {"family": args.family, "graph6": line, "order": g.n, "size": g.edge_count}
    if cert is not None:
        sidecar.update(cert.to_json())
    text = json.dumps(sidecar, indent=2)
    if args.output:
        Path(args.output).write_text(line + "\n")
        Path(args.output + ".json").write_text(text + "\n")
        print(f"wrote {args.output} and {args.output}.json (order {g.n})")
    else:
        print(line)
        print(text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = GraphClassSpec.parse(args.graph_class)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        for n in _orders(spec, args.n):
            for g in spec.graphs(n):
                out.write(emit_graph6(g) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="decision-number", description="Exact signed decision numbers of graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    variants = sorted(VARIANTS)

    s = sub.add_parser("solve", help="solve graph6 input (a string, a file path, or - for stdin)")
    s.add_argument("input")
    s.add_argument("--variant", choices=variants, required=True)
    s.set_defaults(func=cmd_solve)

    def class_opts(q, need_variant=False):
        q.add_argument("--class", dest="graph_class", required=True,
                       help="trees, cubic, cubic3 (3-connected cubic) or g6:<path>")
        q.add_argument("--n", help="orders as a..b, a or a,b,c (defaults to all orders in a g6 file)")
        if need_variant:
            q.add_argument("--variant", choices=variants, required=True)

    t = sub.add_parser("table", help="min/max table over a graph class")
    class_opts(t, need_variant=True)
    t.add_argument("--workers", type=int, default=None,
                   help="worker processes (default from DECISION_NUMBER_WORKERS, else 1)")
    t.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
    t.add_argument("--checkpoint", help="JSON file for resuming interrupted runs")
    t.add_argument("--witnesses", help="append one 'graph6 value signs' line per graph to this file")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check every bound and construction over a class")
    class_opts(v)
    v.add_argument("--inject-fault", type=int, default=0, help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="emit a named graph family with its certified assignment")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("--skeleton", help="skeleton tree for extremal-bad-tree: pathK, starK or graph6")
    c.add_argument("--variant", choices=variants, help="replace the certificate by a solver optimum")
    c.add_argument("--output", "-o", help="write graph6 here and the JSON sidecar to <output>.json")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="dump a graph class as graph6")
    class_opts(e)
    e.add_argument("--output", "-o")
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("classes", help="compare connected and 3-connected cubic rows with published ones")
    k.add_argument("--n", default="10,12")
    k.set_defaults(func=cmd_classes)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
