"""Streams of unlabeled graphs: free trees, connected cubic graphs, graph6 files."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .canon import canonical_form
from .graph import Graph, from_edges, is_connected
from .graph6 import read_graph6_file

MAX_TREE_ORDER = 20
MAX_CUBIC_ORDER = 16


class EnumerationError(ValueError):
    pass


# --- free trees -------------------------------------------------------------
#
# Wright, Richmond, Odlyzko and McKay's successor method on canonical level
# sequences: a tree is stored as the preorder depth list of a rooted version,
# and each step moves to the next rooted sequence that is the canonical
# representative of a free tree (rooted at its centre, larger branch last).


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of ``levels`` among rooted level sequences (Beyer-Hedetniemi)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first subtree of the root (``left``) from the rest."""
    second_child = None
    seen_one = False
    for i, d in enumerate(levels):
        if d == 1:
            if seen_one:
                second_child = i
                break
            seen_one = True
    if second_child is None:
        second_child = len(levels)
    left = [d - 1 for d in levels[1:second_child]]
    rest = [0] + levels[second_child:]
    return left, rest


def _canonical_or_next(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    left_h, rest_h = max(left), max(rest)
    ok = rest_h >= left_h
    if ok and rest_h == left_h:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    out = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(out)
        tail = list(range(1, max(new_left) + 2))
        out[-len(tail):] = tail
    return out


def levels_to_tree(levels: list[int]) -> Graph:
    stack: list[int] = []
    edges = []
    for v, d in enumerate(levels):
        del stack[d:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return from_edges(len(levels), edges)


def tree_level_sequences(n: int) -> Iterator[list[int]]:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise EnumerationError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    if n <= 2:
        yield list(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _canonical_or_next(levels)
        if levels is None:
            return
        yield levels
        levels = _next_rooted(levels)


def free_trees(n: int) -> Iterator[Graph]:
    """Every free tree of order ``n`` exactly once, in a fixed order."""
    for levels in tree_level_sequences(n):
        yield levels_to_tree(levels)


# --- connected cubic graphs --------------------------------------------------
#
# Order n is built from all cubic graphs (possibly disconnected) of order
# n-2 and n-4 by two operations, deduplicated by canonical form:
#   edge insertion    subdivide two distinct edges and join the new vertices
#   diamond insertion replace an edge uv by u-p, q-v with p, q the tips of a
#                     fresh K4 minus an edge
# Completeness is not proved here; the tests check the resulting counts
# against the known sequence 1, 2, 5, 19, 85, 509 (and 4060 at n = 16).


def _edge_insertions(g: Graph) -> Iterator[Graph]:
    edges = g.edges()
    n = g.n
    x, y = n, n + 1
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            (a, b), (c, d) = edges[i], edges[j]
            new = [e for k, e in enumerate(edges) if k != i and k != j]
            new += [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield from_edges(n + 2, new)


def _diamond_insertions(g: Graph) -> Iterator[Graph]:
    edges = g.edges()
    n = g.n
    p, q, s, t = n, n + 1, n + 2, n + 3
    for i, (u, v) in enumerate(edges):
        new = [e for k, e in enumerate(edges) if k != i]
        new += [(u, p), (q, v), (p, s), (p, t), (q, s), (q, t), (s, t)]
        yield from_edges(n + 4, new)


def _disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return from_edges(g.n + h.n, edges)


def _k4() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], "K4")


class _CubicCache:
    """Connected cubic graphs by order, built bottom-up and memoised per process."""

    def __init__(self):
        self.connected: dict[int, list[Graph]] = {4: [_k4()]}
        self.every: dict[int, list[Graph]] = {}

    def all_cubic(self, n: int) -> list[Graph]:
        """All cubic graphs of order n, connected or not (used as parents)."""
        if n < 4 or n % 2:
            return []
        if n in self.every:
            return self.every[n]
        out = list(self.get(n))
        # disconnected: union of a connected component and the rest, ordered to avoid repeats
        seen = {canonical_form(g).key for g in out}
        for k in range(4, n - 3, 2):
            for comp in self.get(k):
                for rest in self.all_cubic(n - k):
                    u = _disjoint_union(comp, rest)
                    key = canonical_form(u).key
                    if key not in seen:
                        seen.add(key)
                        out.append(u)
        self.every[n] = out
        return out

    def get(self, n: int) -> list[Graph]:
        if n in self.connected:
            return self.connected[n]
        if n < 4 or n % 2:
            return []
        found: dict[bytes, Graph] = {}
        parents = [(g, _edge_insertions) for g in self.all_cubic(n - 2)]
        parents += [(g, _diamond_insertions) for g in self.all_cubic(n - 4)]
        for parent, op in parents:
            for child in op(parent):
                if not is_connected(child):
                    continue
                cf = canonical_form(child)
                if cf.key not in found:
                    found[cf.key] = child.relabel(cf.labeling)
        # canonical key order makes the stream independent of generation order
        self.connected[n] = [found[k] for k in sorted(found)]
        return self.connected[n]


_CACHE = _CubicCache()


def connected_cubic(n: int) -> Iterator[Graph]:
    """Every connected cubic graph of order ``n`` once, up to isomorphism."""
    if n % 2 or not 4 <= n <= MAX_CUBIC_ORDER:
        raise EnumerationError(f"cubic order must be even and in 4..{MAX_CUBIC_ORDER}, got {n}")
    yield from _CACHE.get(n)


def connectivity(g: Graph) -> int:
    """Vertex connectivity, by brute force over small separators (0..3 suffices for cubic)."""
    from itertools import combinations

    if not is_connected(g):
        return 0
    for k in range(1, g.max_degree() + 1):
        for cut in combinations(range(g.n), k):
            rest, _ = g.delete_vertices(cut)
            if rest.n and not is_connected(rest):
                return k
    return g.max_degree() if g.edge_count else 0


def three_connected_cubic(n: int) -> Iterator[Graph]:
    for g in connected_cubic(n):
        if connectivity(g) >= 3:
            yield g


# --- class specs ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphClassSpec:
    kind: str  # "trees", "cubic", "cubic3" or "g6"
    path: Path | None = None

    @classmethod
    def parse(cls, text: str) -> "GraphClassSpec":
        if text in ("trees", "cubic", "cubic3"):
            return cls(text)
        if text.startswith("g6:"):
            return cls("g6", Path(text[3:]))
        raise EnumerationError(f"unknown graph class {text!r}; use trees, cubic, cubic3 or g6:<path>")

    def label(self) -> str:
        return f"g6:{self.path}" if self.kind == "g6" else self.kind

    def graphs(self, n: int | None = None) -> Iterator[Graph]:
        if self.kind == "trees":
            return free_trees(n)
        if self.kind == "cubic":
            return connected_cubic(n)
        if self.kind == "cubic3":
            return three_connected_cubic(n)
        return (g for g in read_graph6_file(self.path) if n is None or g.n == n)

    def orders(self) -> list[int] | None:
        """Orders present in a graph6 file (None for generated classes)."""
        if self.kind != "g6":
            return None
        return sorted({g.n for g in read_graph6_file(self.path)})


def read_class_file(path: str | Path) -> Iterator[Graph]:
    return read_graph6_file(path)
