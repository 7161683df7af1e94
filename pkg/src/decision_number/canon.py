"""Canonical labelling by equitable refinement and individualisation search.

Good enough for the orders this package enumerates (n <= ~30); no attempt is
made at nauty-style performance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, _bits
from .graph6 import emit_graph6


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant key of a graph.

    ``key`` alone decides equality; ``labeling[v]`` is the canonical position of
    vertex ``v`` for this particular input.
    """

    key: bytes
    labeling: tuple[int, ...] = field(compare=False, repr=False)


def _vertex_invariant(g: Graph, v: int) -> tuple[int, int]:
    row = g.adj[v]
    tri = 0
    for u in _bits(row):
        tri += (g.adj[u] & row).bit_count()
    return (row.bit_count(), tri // 2)


def _initial_cells(g: Graph) -> list[list[int]]:
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(_vertex_invariant(g, v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def _refine(adj: tuple[int, ...], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine ``cells`` to the coarsest equitable partition finer than it.

    ``splitters`` is a stack of vertex-set bitmasks still to be processed; the
    resulting cell order depends only on the counts, so it is label-invariant.
    """
    cells = [list(c) for c in cells]
    while splitters:
        wmask = splitters.pop()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[v] & wmask).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                i += 1
                continue
            buckets: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                buckets.setdefault(c, []).append(v)
            parts = [buckets[c] for c in sorted(buckets)]
            cells[i:i + 1] = parts
            for part in parts:
                mask = 0
                for v in part:
                    mask |= 1 << v
                splitters.append(mask)
            i += len(parts)
    return cells


def _cells_mask(cell: list[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


def _orbit_reps(candidates: list[int], gens: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for x in range(n):
            a, b = find(x), find(perm[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    seen = set()
    reps = []
    for v in candidates:
        root = find(v)
        if root not in seen:
            seen.add(root)
            reps.append(v)
    return reps


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.automorphisms: list[tuple[int, ...]] = []

    def leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        pos = [0] * self.g.n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            row = 0
            for u in _bits(self.g.adj[v]):
                row |= 1 << pos[u]
            code.append(row)
        code = tuple(code)
        if self.best_code is None or code > self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            # order -> best_order maps one leaf onto the other: an automorphism
            perm = [0] * self.g.n
            for a, b in zip(order, self.best_order):
                perm[a] = b
            self.automorphisms.append(tuple(perm))

    def run(self, cells: list[list[int]], fixed: list[int]) -> None:
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            self.leaf(cells)
            return
        idx = next(i for i, c in enumerate(cells) if c is target)
        done: list[int] = []
        for v in sorted(target):
            if done:
                gens = [a for a in self.automorphisms if all(a[x] == x for x in fixed)]
                if gens and v not in _orbit_reps(done + [v], gens, self.g.n):
                    continue
            done.append(v)
            rest = [u for u in target if u != v]
            split = cells[:idx] + [[v], rest] + cells[idx + 1:]
            refined = _refine(self.g.adj, split, [1 << v])
            self.run(refined, fixed + [v])


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n == 0:
        return CanonicalForm(b"?", ())
    search = _Search(g)
    start = _initial_cells(g)
    cells = _refine(g.adj, start, [_cells_mask(c) for c in start])
    search.run(cells, [])
    order = search.best_order
    labeling = [0] * g.n
    for i, v in enumerate(order):
        labeling[v] = i
    canon = g.relabel(labeling)
    return CanonicalForm(emit_graph6(canon).encode("ascii"), tuple(labeling))


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Automorphisms discovered while canonicalising (not necessarily a full generating set)."""
    if g.n == 0:
        return []
    search = _Search(g)
    start = _initial_cells(g)
    search.run(_refine(g.adj, start, [_cells_mask(c) for c in start]), [])
    return search.automorphisms


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count == h.edge_count and canonical_form(g) == canonical_form(h)
