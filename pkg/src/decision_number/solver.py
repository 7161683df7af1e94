"""The four +-1 decision numbers: evaluation, exhaustive oracle, branch and bound.

A variant is a neighbourhood kind (open ``N(v)`` or closed ``N[v]``) paired
with a constraint sense:

    bad        f(N(v)) <= 1, maximise f(V)
    nice       f(N[v]) <= 1, maximise f(V)
    good       f(N(v)) >= 1, minimise f(V)
    excellent  f(N[v]) >= 1, minimise f(V)

Both search kernels solve the ``<= bound, maximise`` form; the ``>= 1``
variants are mapped onto it by negating the assignment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import _pykernel
from .graph import Graph

try:
    if os.environ.get("DECISION_NUMBER_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernel as _ckernel
except ImportError:
    _ckernel = None

BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    BACKENDS["compiled"] = _ckernel
DEFAULT_BACKEND = "compiled" if _ckernel is not None else "python"

BRUTE_FORCE_LIMIT = 26


class Neighborhood(Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Variant:
    name: str
    neighborhood: Neighborhood
    at_most_one: bool  # True: f(S_v) <= 1 and maximise; False: f(S_v) >= 1 and minimise

    @property
    def closed(self) -> bool:
        return self.neighborhood is Neighborhood.CLOSED

    @property
    def maximize(self) -> bool:
        return self.at_most_one

    def __str__(self) -> str:
        return self.name


BAD = Variant("bad", Neighborhood.OPEN, True)
NICE = Variant("nice", Neighborhood.CLOSED, True)
GOOD = Variant("good", Neighborhood.OPEN, False)
EXCELLENT = Variant("excellent", Neighborhood.CLOSED, False)
VARIANTS = {v.name: v for v in (BAD, NICE, GOOD, EXCELLENT)}


def get_variant(variant: Variant | str) -> Variant:
    if isinstance(variant, Variant):
        return variant
    try:
        return VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(VARIANTS)}") from None


class SolveError(ValueError):
    pass


@dataclass(frozen=True)
class Evaluation:
    valid: bool
    total: int
    violating: tuple[int, ...]


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "optimal" or "infeasible"
    value: int | None
    witness: tuple[int, ...] | None
    nodes_explored: int

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def neighborhood_sum(g: Graph, f: Sequence[int], v: int, closed: bool) -> int:
    s = f[v] if closed else 0
    row = g.adj[v]
    while row:
        low = row & -row
        s += f[low.bit_length() - 1]
        row ^= low
    return s


def evaluate(g: Graph, variant: Variant | str, f: Sequence[int]) -> Evaluation:
    variant = get_variant(variant)
    if len(f) != g.n:
        raise SolveError(f"assignment has length {len(f)}, graph has order {g.n}")
    if any(x not in (1, -1) for x in f):
        raise SolveError("assignment values must be +1 or -1")
    bad = []
    for v in range(g.n):
        s = neighborhood_sum(g, f, v, variant.closed)
        if (s > 1) if variant.at_most_one else (s < 1):
            bad.append(v)
    return Evaluation(not bad, sum(f), tuple(bad))


def _constraint_sets(g: Graph, closed: bool) -> tuple[list[int], list[int]]:
    ptr = [0]
    idx: list[int] = []
    for v in range(g.n):
        members = g.neighbors(v)
        if closed:
            members = sorted(members + [v])
        idx.extend(members)
        ptr.append(len(idx))
    return ptr, idx


def branching_order(g: Graph) -> list[int]:
    """Descending degree, ties broken by vertex index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _kernel(backend: str | None):
    name = backend or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def _outcome(variant: Variant, best, witness, nodes) -> SolveOutcome:
    if witness is None:
        return SolveOutcome("infeasible", None, None, nodes)
    sign = 1 if variant.at_most_one else -1
    return SolveOutcome("optimal", sign * best, tuple(sign * x for x in witness), nodes)


def solve(g: Graph, variant: Variant | str, backend: str | None = None) -> SolveOutcome:
    """Exact optimum by branch and bound."""
    variant = get_variant(variant)
    ptr, idx = _constraint_sets(g, variant.closed)
    bound = 1 if variant.at_most_one else -1
    best, witness, nodes = _kernel(backend).branch_and_bound(
        g.n, branching_order(g), ptr, idx, bound, -g.n - 1
    )
    return _outcome(variant, best, witness, nodes)


def solve_bruteforce(g: Graph, variant: Variant | str, backend: str | None = None) -> SolveOutcome:
    """Exact optimum by exhausting assignments (oracle for ``solve``)."""
    variant = get_variant(variant)
    if g.n > BRUTE_FORCE_LIMIT:
        raise SolveError(f"order {g.n} exceeds the exhaustive limit {BRUTE_FORCE_LIMIT}; use solve()")
    ptr, idx = _constraint_sets(g, variant.closed)
    bound = 1 if variant.at_most_one else -1
    best, witness, examined = _kernel(backend).brute_force(g.n, ptr, idx, bound)
    return _outcome(variant, best, witness, examined)


def solve_all(g: Graph, backend: str | None = None) -> dict[str, int | None]:
    """Values of all four decision numbers (None where infeasible)."""
    return {name: solve(g, v, backend).value for name, v in VARIANTS.items()}

