"""Compare the compiled and pure-Python branch-and-bound kernels.

Usage: python benchmarks/bench_kernel.py [--repeat K]
"""

from __future__ import annotations

import argparse
import time

from decision_number.constructions import heawood_tower, k23_chain
from decision_number.enumeration import connected_cubic, free_trees
from decision_number.graph import desargues_graph, petersen_graph
from decision_number.solver import BACKENDS, VARIANTS, solve


def workloads():
    yield "Petersen, all variants", [petersen_graph()]
    yield "Desargues (n=20), all variants", [desargues_graph()]
    yield "K23 chain t=3 (n=30), all variants", [k23_chain(3)]
    yield "Heawood tower level 2 (n=28), all variants", [heawood_tower(2)]
    yield "trees n=13 (1301), all variants", list(free_trees(13))
    yield "connected cubic n=12 (85), all variants", list(connected_cubic(12))


def run(graphs, backend):
    nodes = 0
    for g in graphs:
        for name in VARIANTS:
            nodes += solve(g, name, backend).nodes_explored
    return nodes


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = sorted(BACKENDS)
    print(f"{'workload':46} " + " ".join(f"{b:>12}" for b in backends) + "   speedup   nodes")
    for label, graphs in workloads():
        times, nodes = {}, None
        for b in backends:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                count = run(graphs, b)
                best = min(best, time.perf_counter() - t0)
            assert nodes in (None, count), "backends explored different trees"
            nodes, times[b] = count, best
        speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else "      n/a"
        print(f"{label:46} " + " ".join(f"{times[b]:11.4f}s" for b in backends) + f"  {speed}  {nodes}")


if __name__ == "__main__":
    main()
