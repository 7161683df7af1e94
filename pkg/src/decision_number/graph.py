"""Simple undirected graphs on bitset adjacency rows, plus the structural
transforms used by the constructions (bipartite double cover, square)."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 512
INF = float("inf")


class GraphError(ValueError):
    """Raised for malformed graph construction or violated preconditions."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose set bits are the neighbours of ``v``.
    """

    __slots__ = ("n", "adj", "edge_count", "name")

    def __init__(self, n: int, adj: Sequence[int], name: str | None = None):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise GraphError("adjacency length does not match order")
        rows = tuple(int(r) for r in adj)
        full = (1 << n) - 1
        deg_sum = 0
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            deg_sum += row.bit_count()
        self.n = n
        self.adj = rows
        self.name = name
        self.edge_count = deg_sum // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count}>"

    def __reduce__(self):
        return (Graph, (self.n, self.adj, self.name))

    def __setattr__(self, key, value):
        if hasattr(self, "edge_count"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, key, value)

    @property
    def m(self) -> int:
        return self.edge_count

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> list[int]:
        return sorted(self.neighbors(v) + [v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, rows, self.name)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in _bits(self.adj[v]):
                if u in index:
                    rows[index[v]] |= 1 << index[u]
        return Graph(len(keep), rows)

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Remove ``vertices``; also return the old label of each surviving vertex."""
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced(keep), keep


def from_edges(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, name)


def distances_from(g: Graph, source: int) -> list[float]:
    """BFS distances from ``source``; unreachable vertices get ``inf``."""
    if not 0 <= source < g.n:
        raise GraphError(f"vertex {source} not in graph")
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in _bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def ball(g: Graph, v: int, radius: int) -> int:
    """Bitset of vertices within ``radius`` of ``v`` (including ``v``)."""
    seen = 1 << v
    frontier = seen
    for _ in range(radius):
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    comps = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = ball(g, start, g.n)
        comps.append(list(_bits(comp)))
        left &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or ball(g, 0, g.n).bit_count() == g.n


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """Return a bipartition ``(U, V)`` or ``None`` if ``g`` has an odd cycle."""
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in _bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return ([v for v in range(g.n) if side[v] == 0], [v for v in range(g.n) if side[v] == 1])


def is_regular(g: Graph, k: int) -> bool:
    return all(row.bit_count() == k for row in g.adj)


def is_cubic(g: Graph) -> bool:
    return is_regular(g, 3)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def bipartite_double_cover(g: Graph) -> Graph:
    """Vertex ``2i`` is the primed copy of ``i``, ``2i+1`` the double-primed copy."""
    edges = []
    for u, v in g.edges():
        edges.append((2 * u, 2 * v + 1))
        edges.append((2 * v, 2 * u + 1))
    name = f"double cover of {g.name}" if g.name else None
    return from_edges(2 * g.n, edges, name)


def square_adjacency(g: Graph) -> Graph:
    """Graph joining every pair of vertices at distance 1 or 2 in ``g``."""
    rows = []
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= g.adj[u] | (1 << u)
        rows.append(row & ~(1 << v))
    return Graph(g.n, rows)


# Named graphs used throughout the constructions and tests.

def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"K{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)], f"K{a},{b}")


def star_graph(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def prism_graph() -> Graph:
    return from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)], "prism")


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner, "Petersen")


def heawood_graph() -> Graph:
    """Incidence graph of the Fano plane: points 0..6, lines 7..13."""
    lines = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    edges = [(p, 7 + j) for j, line in enumerate(lines) for p in line]
    return from_edges(14, edges, "Heawood")


def desargues_graph() -> Graph:
    """Generalized Petersen graph GP(10, 3)."""
    outer = [(i, (i + 1) % 10) for i in range(10)]
    spokes = [(i, i + 10) for i in range(10)]
    inner = [(10 + i, 10 + (i + 3) % 10) for i in range(10)]
    return from_edges(20, outer + spokes + inner, "Desargues")
