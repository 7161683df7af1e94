"""Constructive procedures that output graphs together with certified
+-1 assignments, and the extremal families built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import (
    Graph,
    GraphError,
    _bits,
    ball,
    bipartite_double_cover,
    from_edges,
    heawood_graph,
    is_bipartite,
    is_connected,
    is_cubic,
    is_tree,
    square_adjacency,
)
from .solver import BAD, EXCELLENT, GOOD, NICE, Variant, evaluate, solve


@dataclass(frozen=True)
class CertifiedAssignment:
    """An assignment with a claim ``total <relation> bound`` for ``variant``."""

    graph: Graph
    variant: Variant
    assignment: tuple[int, ...]
    relation: str  # "<=" or ">="
    bound: Fraction

    @property
    def total(self) -> int:
        return sum(self.assignment)

    def check(self) -> bool:
        ev = evaluate(self.graph, self.variant, self.assignment)
        if not ev.valid:
            return False
        return ev.total <= self.bound if self.relation == "<=" else ev.total >= self.bound

    def to_json(self) -> dict:
        return {
            "variant": self.variant.name,
            "order": self.graph.n,
            "assignment": list(self.assignment),
            "total": self.total,
            "claim": f"total {self.relation} {self.bound}",
            "valid": self.check(),
        }


def _certify(g: Graph, variant: Variant, f, relation: str, bound) -> CertifiedAssignment:
    return CertifiedAssignment(g, variant, tuple(f), relation, Fraction(bound))


# --- trees -------------------------------------------------------------------------


def extremal_bad_tree(skeleton: Graph) -> CertifiedAssignment:
    """Tree of order 10k - 6 grown from a k-vertex skeleton tree.

    Each skeleton vertex v gets d(v) + 1 new neighbours, each of which gets
    two new leaves.  The skeleton carries -1, everything else +1.
    """
    if not is_tree(skeleton):
        raise GraphError("skeleton must be a tree")
    k = skeleton.n
    edges = list(skeleton.edges())
    nxt = k
    for v in range(k):
        for _ in range(skeleton.degree(v) + 1):
            mid = nxt
            edges += [(v, mid), (mid, mid + 1), (mid, mid + 2)]
            nxt += 3
    g = from_edges(nxt, edges, f"extremal bad tree (k={k})")
    f = [-1] * k + [1] * (nxt - k)
    return _certify(g, BAD, f, ">=", 8 * k - 6)


def _tree_nice(adj: tuple[int, ...], alive: int, f: list[int]) -> None:
    """Fill ``f`` on the subtree spanned by bitset ``alive`` with a nice function of total >= 0."""
    size = alive.bit_count()
    if size == 1:
        f[(alive & -alive).bit_length() - 1] = 1
        return
    if size == 2:
        a, b = _bits(alive)
        f[a], f[b] = 1, -1
        return
    deg = {v: (adj[v] & alive).bit_count() for v in _bits(alive)}

    # two pendant vertices with a common neighbour
    for u in _bits(alive):
        pendants = [w for w in _bits(adj[u] & alive) if deg[w] == 1]
        if len(pendants) >= 2:
            v1, v2 = pendants[0], pendants[1]
            _tree_nice(adj, alive & ~(1 << v1) & ~(1 << v2), f)
            f[v2] = f[u]
            f[u] = -1
            f[v1] = 1
            return

    # otherwise: strip the end of a longest path together with its neighbour
    start = (alive & -alive).bit_length() - 1
    end = _farthest(adj, alive, start)
    u = _farthest(adj, alive, end)
    closed = (adj[u] & alive) | (1 << u)
    _tree_nice(adj, alive & ~closed, f)
    f[u] = 1
    for w in _bits(adj[u] & alive):
        f[w] = -1


def _farthest(adj: tuple[int, ...], alive: int, source: int) -> int:
    seen = 1 << source
    frontier = seen
    last = source
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
        if frontier:
            last = (frontier & -frontier).bit_length() - 1
    return last


def nice_tree_function(t: Graph) -> CertifiedAssignment:
    """Nice function with non-negative total on a tree, by pendant-pair/longest-path recursion."""
    if not is_tree(t):
        raise GraphError("input must be a tree")
    f = [0] * t.n
    _tree_nice(t.adj, (1 << t.n) - 1, f)
    return _certify(t, NICE, f, ">=", 0)


# --- good functions on cubic graphs ----------------------------------------------------


def greedy_good_cubic_bipartite(g: Graph) -> CertifiedAssignment:
    """Two-phase greedy good function; no two -1 vertices share a neighbour."""
    if not (is_cubic(g) and is_connected(g) and is_bipartite(g) is not None):
        raise GraphError("greedy good function needs a connected cubic bipartite graph")
    f = [0] * g.n
    unvalued = (1 << g.n) - 1

    # Step 1: adjacent unvalued pairs, lowest (u, v) first
    while True:
        pair = None
        for u in _bits(unvalued):
            w = g.adj[u] & unvalued
            if w:
                pair = (u, (w & -w).bit_length() - 1)
                break
        if pair is None:
            break
        u, v = pair
        f[u] = f[v] = -1
        unvalued &= ~(1 << u) & ~(1 << v)
        for w in _bits((ball(g, u, 2) | ball(g, v, 2)) & unvalued):
            f[w] = 1
        unvalued &= ~(ball(g, u, 2) | ball(g, v, 2))

    # Step 2: isolated unvalued vertices, lowest index first
    while unvalued:
        v = (unvalued & -unvalued).bit_length() - 1
        f[v] = -1
        unvalued &= ~(1 << v)
        at_two = ball(g, v, 2) & ~ball(g, v, 1)
        for w in _bits(at_two & unvalued):
            f[w] = 1
        unvalued &= ~at_two
    return _certify(g, GOOD, f, "<=", Fraction(5 * g.n, 7))


def double_cover_good(g: Graph) -> CertifiedAssignment:
    """Good function on ``g`` projected from one on its bipartite double cover."""
    h = bipartite_double_cover(g)
    if is_cubic(h) and is_connected(h):
        fh = list(greedy_good_cubic_bipartite(h).assignment)
    else:
        out = solve(h, GOOD)
        if not out.optimal:
            raise GraphError("double cover has no good function (isolated vertex)")
        fh = list(out.witness)
    primed = [fh[2 * i] for i in range(g.n)]
    doubled = [fh[2 * i + 1] for i in range(g.n)]
    f = primed if sum(primed) <= sum(doubled) else doubled
    return _certify(g, GOOD, f, "<=", Fraction(sum(fh), 2))


# --- excellent functions from 2-distance colourings ---------------------------------------


def _smallest_last(h: Graph) -> list[int]:
    deg = [h.degree(v) for v in range(h.n)]
    left = set(range(h.n))
    order = []
    while left:
        v = min(left, key=lambda x: (deg[x], x))
        order.append(v)
        left.remove(v)
        for u in _bits(h.adj[v]):
            if u in left:
                deg[u] -= 1
    return order[::-1]


def _greedy(h: Graph, order: list[int]) -> list[int]:
    color = [-1] * h.n
    for v in order:
        used = {color[u] for u in _bits(h.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _dsatur(h: Graph) -> list[int]:
    color = [-1] * h.n
    for _ in range(h.n):
        best = None
        for v in range(h.n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in _bits(h.adj[v]) if color[u] >= 0})
            key = (sat, h.degree(v), -v)
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        used = {color[u] for u in _bits(h.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _eliminate_classes(h: Graph, color: list[int]) -> list[int]:
    """Try to empty the highest colour class by moving its vertices to lower colours."""
    color = list(color)
    while True:
        top = max(color, default=-1)
        if top <= 0:
            return color
        trial = list(color)
        for v in [v for v in range(h.n) if trial[v] == top]:
            used = {trial[u] for u in _bits(h.adj[v])}
            free = [c for c in range(top) if c not in used]
            if not free:
                break
            trial[v] = free[0]
        else:
            color = trial
            continue
        return color


def _normalize(color: list[int]) -> list[int]:
    remap: dict[int, int] = {}
    return [remap.setdefault(c, len(remap)) for c in color]


def two_distance_coloring(g: Graph) -> list[int]:
    """Proper colouring of the square of ``g`` (heuristic: fewest colours among a few greedy runs)."""
    h = square_adjacency(g)
    attempts = [_greedy(h, _smallest_last(h)), _dsatur(h), _greedy(h, list(range(g.n)))]
    best = None
    for color in attempts:
        color = _normalize(_eliminate_classes(h, color))
        if best is None or max(color, default=-1) < max(best, default=-1):
            best = color
    return best


def is_two_distance_coloring(g: Graph, color: list[int]) -> bool:
    h = square_adjacency(g)
    return all(color[u] != color[v] for u, v in h.edges())


def excellent_from_coloring(g: Graph, color: list[int] | None = None) -> CertifiedAssignment:
    """-1 on a largest colour class of a 2-distance colouring, +1 elsewhere."""
    if g.n and g.min_degree() < 2:
        raise GraphError("excellent construction needs minimum degree at least 2")
    if color is None:
        color = two_distance_coloring(g)
    if not is_two_distance_coloring(g, color):
        raise GraphError("colouring is not proper on the square of the graph")
    sizes: dict[int, int] = {}
    for c in color:
        sizes[c] = sizes.get(c, 0) + 1
    largest = min(sizes, key=lambda c: (-sizes[c], c))
    f = [-1 if c == largest else 1 for c in color]
    return _certify(g, EXCELLENT, f, "<=", g.n - 2 * sizes[largest])


# --- families ---------------------------------------------------------------------------


def k23_chain(t: int) -> Graph:
    """2t copies of K_{2,3} joined into a cubic bipartite ring of order 10t."""
    if t < 1:
        raise GraphError("t must be positive")
    copies = 2 * t

    def vid(i: int, part: str) -> int:
        return 5 * (i % copies) + "abcde".index(part)

    edges = []
    for i in range(copies):
        for left in "ab":
            for right in "cde":
                edges.append((vid(i, left), vid(i, right)))
    for i in range(t):
        edges.append((vid(2 * i, "d"), vid(2 * i + 1, "d")))
    for i in range(copies):
        edges.append((vid(i, "c"), vid(i + 1, "e")))
    return from_edges(5 * copies, edges, f"K23 chain (t={t})")


def heawood() -> Graph:
    return heawood_graph()


def heawood_tower(level: int) -> Graph:
    if level < 1:
        raise GraphError("tower level starts at 1")
    g = heawood_graph()
    for _ in range(level - 1):
        g = bipartite_double_cover(g)
    return Graph(g.n, g.adj, f"Heawood tower level {level}")


def heawood_tower_good(level: int) -> CertifiedAssignment:
    """Good function of total 5n/7 on a tower level, lifted copy-wise from the Heawood optimum."""
    g = heawood_graph()
    f = list(solve(g, GOOD).witness)
    for _ in range(level - 1):
        f = [x for x in f for _ in (0, 1)]  # vertex 2i and 2i+1 both copy vertex i
    return _certify(heawood_tower(level), GOOD, f, "<=", Fraction(5 * 14 * 2 ** (level - 1), 7))


# --- total domination ---------------------------------------------------------------------


def minimum_total_dominating_set(g: Graph) -> list[int]:
    """Exact minimum total dominating set by branching on the first undominated vertex."""
    if g.n and g.min_degree() == 0:
        raise GraphError("graphs with isolated vertices have no total dominating set")
    full = (1 << g.n) - 1
    best = [list(range(g.n))]

    def lower(undominated: int) -> int:
        # each new vertex dominates at most max_degree vertices
        return -(-undominated.bit_count() // max(g.max_degree(), 1))

    def branch(chosen: list[int], dominated: int) -> None:
        if dominated == full:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        if len(chosen) + lower(full & ~dominated) >= len(best[0]):
            return
        free = full & ~dominated
        v = (free & -free).bit_length() - 1
        for u in _bits(g.adj[v]):
            if u in chosen:
                continue
            chosen.append(u)
            branch(chosen, dominated | g.adj[u])
            chosen.pop()

    branch([], 0)
    return sorted(best[0])


def greedy_total_dominating_set(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    dominated = 0
    chosen: list[int] = []
    while dominated != full:
        u = max(range(g.n), key=lambda x: ((g.adj[x] & ~dominated).bit_count(), -x))
        chosen.append(u)
        dominated |= g.adj[u]
    # drop redundant members
    for u in list(chosen):
        rest = [w for w in chosen if w != u]
        cover = 0
        for w in rest:
            cover |= g.adj[w]
        if cover == full:
            chosen = rest
    return sorted(chosen)


EXACT_TDS_LIMIT = 26


def bad_from_total_dominating_set(g: Graph) -> CertifiedAssignment:
    """Bad function of non-negative total on a cubic graph: -1 on a total dominating set."""
    if not is_cubic(g):
        raise GraphError("needs a cubic graph")
    s = minimum_total_dominating_set(g) if g.n <= EXACT_TDS_LIMIT else greedy_total_dominating_set(g)
    members = set(s)
    f = [-1 if v in members else 1 for v in range(g.n)]
    return _certify(g, BAD, f, ">=", 0)
