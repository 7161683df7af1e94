import itertools
import random

import networkx as nx
import pytest

from decision_number.canon import automorphism_generators, canonical_form, is_isomorphic
from decision_number.graph import (
    complete_bipartite,
    cycle_graph,
    desargues_graph,
    heawood_graph,
    petersen_graph,
)
from decision_number.graph6 import emit_graph6

from conftest import random_graph


def _shuffle(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def _brute_canonical(g):
    """Oracle: lexicographically largest graph6 over all relabelings."""
    return max(emit_graph6(g.relabel(p)) for p in itertools.permutations(range(g.n)))


def test_invariant_under_relabeling(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        assert canonical_form(g) == canonical_form(_shuffle(g, rng))


def test_agrees_with_permutation_oracle(rng):
    # equal oracle keys must coincide with equal canonical keys
    graphs = [random_graph(rng, 6, rng.random()) for _ in range(60)]
    keyed = [(_brute_canonical(g), canonical_form(g)) for g in graphs]
    for (oa, ca), (ob, cb) in itertools.combinations(keyed, 2):
        assert (oa == ob) == (ca == cb)


def test_labeling_realises_key():
    g = petersen_graph()
    cf = canonical_form(g)
    assert len(cf.labeling) == 10


def test_isomorphism_against_networkx(rng):
    for _ in range(1500):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, 0.5)
        h = _shuffle(g, rng) if rng.random() < 0.5 else random_graph(rng, n, 0.5)
        a, b = nx.Graph(list(g.edges())), nx.Graph(list(h.edges()))
        a.add_nodes_from(range(n))
        b.add_nodes_from(range(n))
        assert is_isomorphic(g, h) == nx.is_isomorphic(a, b)


@pytest.mark.parametrize("g", [petersen_graph(), heawood_graph(), desargues_graph(),
                               complete_bipartite(3, 3), cycle_graph(12)])
def test_vertex_transitive_graphs(g, rng):
    for _ in range(5):
        assert canonical_form(_shuffle(g, rng)) == canonical_form(g)


def test_discovered_automorphisms_are_automorphisms():
    for g in (petersen_graph(), heawood_graph(), cycle_graph(8)):
        for perm in automorphism_generators(g):
            assert g.relabel(perm) == g


def test_random_regular_graphs_same_degrees_distinguished():
    rng = random.Random(3)
    a = nx.random_regular_graph(3, 16, seed=1)
    b = nx.random_regular_graph(3, 16, seed=2)
    from decision_number.graph import from_edges

    ga, gb = from_edges(16, a.edges()), from_edges(16, b.edges())
    assert is_isomorphic(ga, gb) == nx.is_isomorphic(a, b)
    assert is_isomorphic(ga, _shuffle(ga, rng))
