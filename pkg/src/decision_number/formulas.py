"""Closed forms for paths, cycles and trees, the bound suite, and the
double-star partition test for cubic graphs with bad decision number n/3."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .canon import canonical_form
from .graph import Graph, GraphError, _bits, is_connected, is_cubic, is_tree, petersen_graph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def beta_path(n: int) -> int:
    if n < 2:
        raise ValueError("path order must be at least 2")
    return {0: 0, 2: 2}.get(n % 4, 1)


def beta_cycle(n: int) -> int:
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    return {0: 0, 2: -2}.get(n % 4, -1)


def max_tree_bad(n: int) -> int:
    """Largest bad decision number over all trees of order ``n`` (n >= 3)."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    return n - 2 * _ceil_div(n + 6, 10)


def excellent_path(n: int) -> int:
    if n < 2:
        raise ValueError("path order must be at least 2")
    return n - 2 * _ceil_div(n - 4, 3)


def tree_excellent_lower(n: int) -> int:
    """Lower bound on the excellent decision number of any tree of order ``n``."""
    return excellent_path(n)


# --- bound suite ---------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    name: str
    holds: bool
    left: Fraction
    relation: str
    right: Fraction

    def __str__(self) -> str:
        mark = "ok" if self.holds else "VIOLATED"
        return f"{self.name}: {self.left} {self.relation} {self.right} [{mark}]"


@dataclass
class BoundReport:
    graph_id: str
    values: dict[str, int | None]
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.holds]

    def add(self, name: str, left, relation: str, right) -> None:
        left, right = Fraction(left), Fraction(right)
        holds = {
            "<=": left <= right,
            ">=": left >= right,
            "==": left == right,
            "<": left < right,
            ">": left > right,
        }[relation]
        self.checks.append(BoundCheck(name, holds, left, relation, right))


_PETERSEN_KEY = None


def is_petersen(g: Graph) -> bool:
    global _PETERSEN_KEY
    if g.n != 10 or g.edge_count != 15:
        return False
    if _PETERSEN_KEY is None:
        _PETERSEN_KEY = canonical_form(petersen_graph()).key
    return canonical_form(g).key == _PETERSEN_KEY


def check_bounds(g: Graph, values: dict[str, int | None], graph_id: str = "") -> BoundReport:
    """Evaluate every inequality whose precondition ``g`` meets.

    ``values`` maps ``bad``/``nice``/``good``/``excellent`` to solved values
    (``good`` may be None when infeasible).
    """
    n, m = g.n, g.edge_count
    beta, nice, good, exc = values["bad"], values["nice"], values.get("good"), values["excellent"]
    report = BoundReport(graph_id or f"n={n},m={m}", dict(values))
    delta = g.min_degree() if n else 0
    connected = is_connected(g)
    cubic = n > 0 and is_cubic(g)

    # every graph: parities forced by f(V) = n - 2|negatives|
    for name, val in values.items():
        if val is not None:
            report.add(f"{name} parity", val % 2, "==", n % 2)

    if delta >= 2:
        # beta <= n + 1 - sqrt(4n + 1)  <=>  (n + 1 - beta)^2 >= 4n + 1 with n + 1 - beta >= 0
        slack = n + 1 - beta
        report.add("bad <= n+1-sqrt(4n+1) [squared]", 4 * n + 1, "<=", slack * slack if slack >= 0 else -1)
        report.add("bad <= (4m-3n)/5", 5 * beta, "<=", 4 * m - 3 * n)
    if n and g.min_degree() == g.max_degree() and delta > 0:
        k = delta
        report.add(f"bad <= {'0' if k % 2 == 0 else 'n/k'} ({k}-regular)", beta, "<=",
                   0 if k % 2 == 0 else Fraction(n, k))
    if connected and n:
        report.add("bad >= n-m-1", beta, ">=", n - m - 1)

    if is_tree(g):
        report.add("tree: bad >= 0", beta, ">=", 0)
        report.add("tree: nice >= 0", nice, ">=", 0)
        if n >= 2:
            report.add("tree: excellent >= n-2ceil((n-4)/3)", exc, ">=", tree_excellent_lower(n))
        if n >= 3:
            report.add("tree: bad <= n-2ceil((n+6)/10)", beta, "<=", max_tree_bad(n))

    if cubic:
        report.add("cubic: bad >= 0", beta, ">=", 0)
        if nice == 0:
            report.add("cubic: nice = 0 implies 4 | n", n % 4, "==", 0)
        report.add("cubic: 7 nice >= -3n", 7 * nice, ">=", -3 * n)
        report.add("cubic: 7 good <= 5n", 7 * good, "<=", 5 * n)
        report.add("cubic: 3 good >= n", 3 * good, ">=", n)
        report.add("cubic: 7 excellent <= 5n", 7 * exc, "<=", 5 * n)
        if connected:
            if is_petersen(g):
                report.add("cubic: excellent <= 3n/4 fails only for Petersen", 4 * exc, ">", 3 * n)
            else:
                report.add("cubic: 4 excellent <= 3n", 4 * exc, "<=", 3 * n)
    return report


# --- double-star partitions -----------------------------------------------------


def mmm_partition(g: Graph, strict: bool = False) -> list[tuple[int, ...]] | None:
    """Partition V into sets N[u1] | N[u2] over edges u1u2 with |N[u1] | N[u2]| = 6.

    Returns the parts (each listing the two centres first) or None.  With
    ``strict`` a part must also induce the 6-vertex double star; the prism
    has a partition under the default reading but not under this one.
    """
    if not is_cubic(g):
        raise GraphError("mmm_partition needs a cubic graph")
    if g.n % 6:
        return None
    candidates: dict[int, list[tuple[int, int, int]]] = {}
    for u, v in g.edges():
        closed = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
        if closed.bit_count() != 6:
            continue
        if strict and g.induced(_bits(closed)).edge_count != 5:
            continue
        for w in _bits(closed):
            candidates.setdefault(w, []).append((closed, u, v))

    full = (1 << g.n) - 1
    chosen: list[tuple[int, int, int]] = []

    def cover(used: int) -> bool:
        if used == full:
            return True
        free = full & ~used
        w = (free & -free).bit_length() - 1
        for part in candidates.get(w, ()):
            if part[0] & used:
                continue
            chosen.append(part)
            if cover(used | part[0]):
                return True
            chosen.pop()
        return False

    if not cover(0):
        return None
    parts = []
    for closed, u, v in chosen:
        others = [x for x in _bits(closed) if x not in (u, v)]
        parts.append((u, v, *others))
    return parts


def bad_from_partition(g: Graph, parts: list[tuple[int, ...]]) -> list[int]:
    """Bad function with f(N(v)) = 1 everywhere: -1 exactly on part centres."""
    f = [1] * g.n
    for part in parts:
        f[part[0]] = f[part[1]] = -1
    return f

