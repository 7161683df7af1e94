"""Pure-Python search kernels; the compiled ``_kernel`` module mirrors this API.

Both kernels work on the normalised problem

    maximise sum(x)  subject to  sum(x[w] for w in S_v) <= bound  for every v,

with ``x`` in {-1, +1}^n and the sets ``S_v`` given in CSR form (``ptr``, ``idx``).
Every ``S_v`` used here is symmetric (w in S_v iff v in S_w), so the
constraints touched by assigning ``v`` are exactly those indexed by ``S_v``.
"""

from __future__ import annotations

from itertools import combinations


def branch_and_bound(n, order, ptr, idx, bound, incumbent):
    """Return ``(best, witness, nodes)``; ``witness`` is None if nothing beats ``incumbent``."""
    partial = [0] * n
    undecided = [ptr[v + 1] - ptr[v] for v in range(n)]
    x = [0] * n
    best = incumbent
    witness = None
    nodes = 0
    members = [idx[ptr[v]:ptr[v + 1]] for v in range(n)]

    def descend(depth, total):
        nonlocal best, witness, nodes
        nodes += 1
        if depth == n:
            if total > best:
                best = total
                witness = list(x)
            return
        v = order[depth]
        group = members[v]
        for val in (1, -1):
            # optimistic completion: every later vertex gets +1
            if total + val + (n - depth - 1) <= best:
                continue
            ok = True
            for w in group:
                partial[w] += val
                undecided[w] -= 1
                if partial[w] - undecided[w] > bound:
                    ok = False
            if ok:
                x[v] = val
                descend(depth + 1, total + val)
                x[v] = 0
            for w in group:
                partial[w] -= val
                undecided[w] += 1

    # a constraint over an empty set is never touched during the search
    if n > best and all(-size <= bound for size in undecided):
        descend(0, 0)
    return best, witness, nodes


def brute_force(n, ptr, idx, bound):
    """Try sign vectors by increasing number of -1 entries, each size in
    lexicographic order of the -1 positions; the first valid one is optimal.

    Returns ``(best, witness, examined)`` with ``witness`` None when infeasible.
    """
    members = [idx[ptr[v]:ptr[v + 1]] for v in range(n)]
    examined = 0
    for k in range(n + 1):
        for neg in combinations(range(n), k):
            examined += 1
            x = [1] * n
            for v in neg:
                x[v] = -1
            if all(sum(x[w] for w in members[v]) <= bound for v in range(n)):
                return n - 2 * k, x, examined
    return None, None, examined
