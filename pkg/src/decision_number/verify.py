"""Machine checks of every bound, characterisation and construction over a graph class."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .constructions import (
    bad_from_total_dominating_set,
    double_cover_good,
    excellent_from_coloring,
    greedy_good_cubic_bipartite,
    nice_tree_function,
)
from .enumeration import GraphClassSpec, connected_cubic, three_connected_cubic
from .formulas import (
    beta_path,
    check_bounds,
    excellent_path,
    is_petersen,
    max_tree_bad,
    mmm_partition,
)
from .graph import Graph, is_bipartite, is_connected, is_cubic, is_tree
from .graph6 import emit_graph6
from .reference import reference_row
from .solver import VARIANTS, solve_all
from .tables import TableRow

SolveAll = Callable[[Graph], dict]


@dataclass
class CheckTally:
    applied: int = 0
    violations: int = 0
    examples: list[str] = field(default_factory=list)

    def record(self, ok: bool, detail: str = "") -> None:
        self.applied += 1
        if not ok:
            self.violations += 1
            if len(self.examples) < 5:
                self.examples.append(detail)


@dataclass
class VerifyReport:
    label: str
    graphs: int = 0
    tallies: dict[str, CheckTally] = field(default_factory=lambda: defaultdict(CheckTally))

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.tallies[name].record(ok, detail)

    @property
    def violations(self) -> int:
        return sum(t.violations for t in self.tallies.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def lines(self) -> list[str]:
        out = [f"verify {self.label}: {self.graphs} graphs, {len(self.tallies)} checks"]
        for name in sorted(self.tallies):
            t = self.tallies[name]
            status = "PASS" if t.violations == 0 else "FAIL"
            out.append(f"{status} {name}: applied {t.applied}, violations {t.violations}")
            for ex in t.examples:
                out.append(f"    e.g. {ex}")
        out.append(f"total violations: {self.violations}")
        return out


def _is_path(g: Graph) -> bool:
    return is_tree(g) and g.max_degree() <= 2


def verify_graph(g: Graph, report: VerifyReport, solve_fn: SolveAll = solve_all) -> dict:
    """Run every applicable check on one graph; returns the solved values."""
    values = solve_fn(g)
    gid = emit_graph6(g)
    bounds = check_bounds(g, values, gid)
    for c in bounds.checks:
        report.record(c.name, c.holds, f"{gid}: {c}")

    n = g.n
    if is_tree(g):
        cert = nice_tree_function(g)
        report.record("construction: nice tree function valid, total >= 0", cert.check(), gid)
        if _is_path(g) and n >= 3:
            report.record("formula: bad(P_n)", values["bad"] == beta_path(n), f"{gid}: {values['bad']}")
        if _is_path(g) and n >= 2:
            report.record("formula: excellent(P_n)", values["excellent"] == excellent_path(n),
                          f"{gid}: {values['excellent']}")

    if n and is_cubic(g):
        parts = mmm_partition(g)
        attains = 3 * values["bad"] == n
        report.record("characterisation: bad = n/3 iff double-star partition", attains == (parts is not None),
                      f"{gid}: bad={values['bad']}, partition={'yes' if parts else 'no'}")
        report.record("construction: bad from total dominating set", bad_from_total_dominating_set(g).check(), gid)
        report.record("construction: good via double cover", double_cover_good(g).check(), gid)
        report.record("construction: excellent from 2-distance colouring", excellent_from_coloring(g).check(), gid)
        if is_connected(g) and is_bipartite(g) is not None:
            report.record("construction: greedy good on cubic bipartite", greedy_good_cubic_bipartite(g).check(), gid)
        if is_connected(g) and is_petersen(g):
            report.tallies["exception: Petersen (excellent > 3n/4)"].record(True)
    return values


def verify_class(
    spec: GraphClassSpec,
    orders: Iterable[int],
    solve_fn: SolveAll = solve_all,
    graphs_for: Callable[[int], Iterable[Graph]] | None = None,
) -> VerifyReport:
    report = VerifyReport(spec.label())
    tree_max: dict[int, int] = {}
    for n in orders:
        graphs = graphs_for(n) if graphs_for else spec.graphs(n)
        best = None
        for g in graphs:
            report.graphs += 1
            values = verify_graph(g, report, solve_fn)
            if is_tree(g):
                best = values["bad"] if best is None else max(best, values["bad"])
        if spec.kind == "trees" and best is not None and n >= 3:
            tree_max[n] = best
            report.record("formula: max bad over trees = n-2ceil((n+6)/10)", best == max_tree_bad(n),
                          f"n={n}: {best} vs {max_tree_bad(n)}")
    for n in sorted(tree_max):
        if n + 1 in tree_max:
            report.record("step: |a_(n+1) - a_n| <= 1", abs(tree_max[n + 1] - tree_max[n]) <= 1,
                          f"n={n}: {tree_max[n]} -> {tree_max[n + 1]}")
    return report


# --- cubic class discrepancy -----------------------------------------------------


@dataclass
class ClassComparison:
    n: int
    variant: str
    connected: TableRow
    three_connected: TableRow
    published: TableRow | None
    connected_values: set[int]

    @property
    def count_match(self) -> str:
        if self.published is None:
            return "none"
        if self.published.count == self.three_connected.count:
            return "3-connected"
        if self.published.count == self.connected.count:
            return "connected"
        return "none"

    @property
    def extremes_attained(self) -> bool:
        """Published min and max both occur among connected cubic graphs of this order."""
        p = self.published
        return p is not None and p.min in self.connected_values and p.max in self.connected_values

    def line(self) -> str:
        p = self.published.as_tuple()[1:] if self.published else None
        return (
            f"n={self.n} {self.variant}: connected {self.connected.as_tuple()[1:]}, "
            f"3-connected {self.three_connected.as_tuple()[1:]}, published {p}; "
            f"counts match {self.count_match}; published extremes attained in connected class: "
            f"{'yes' if self.extremes_attained else 'no'}; rows equal: "
            f"{'3-connected' if self.published == self.three_connected else ''}"
            f"{'connected' if self.published == self.connected else ''}"
        )


def compare_cubic_classes(orders: Iterable[int] = (10, 12)) -> list[ClassComparison]:
    out = []
    for n in orders:
        conn = list(connected_cubic(n))
        three = {emit_graph6(g) for g in three_connected_cubic(n)}
        vals = [(g, solve_all(g)) for g in conn]
        for variant in VARIANTS:
            row_c = TableRow.empty(n)
            row_3 = TableRow.empty(n)
            seen = set()
            for g, v in vals:
                single = TableRow.single(n, v[variant])
                row_c = row_c.merge(single)
                seen.add(v[variant])
                if emit_graph6(g) in three:
                    row_3 = row_3.merge(single)
            out.append(ClassComparison(n, variant, row_c, row_3, reference_row("cubic", variant, n), seen))
    return out
