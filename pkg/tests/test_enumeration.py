import networkx as nx
import pytest

from decision_number.canon import canonical_form
from decision_number.enumeration import (
    EnumerationError,
    GraphClassSpec,
    connected_cubic,
    connectivity,
    free_trees,
    three_connected_cubic,
    tree_level_sequences,
)
from decision_number.graph import complete_graph, cycle_graph, is_connected, is_cubic, is_tree, petersen_graph
from decision_number.graph6 import write_graph6_file

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301]
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
THREE_CONNECTED = {4: 1, 6: 2, 8: 4, 10: 14, 12: 57}


@pytest.mark.parametrize("n", range(1, 14))
def test_tree_counts(n):
    trees = list(free_trees(n))
    assert len(trees) == TREE_COUNTS[n - 1]
    assert all(is_tree(t) and t.n == n for t in trees)
    assert len({canonical_form(t) for t in trees}) == len(trees)


def test_tree_counts_match_networkx():
    for n in range(1, 13):
        assert len(list(free_trees(n))) == sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else True


def test_level_sequences_start_with_path_like_root():
    first = next(tree_level_sequences(5))
    assert first[0] == 0 and len(first) == 5


def test_tree_stream_is_deterministic():
    assert list(free_trees(9)) == list(free_trees(9))


@pytest.mark.parametrize("n, count", sorted(CUBIC_COUNTS.items()))
def test_connected_cubic_counts(n, count):
    graphs = list(connected_cubic(n))
    assert len(graphs) == count
    assert all(is_cubic(g) and is_connected(g) for g in graphs)
    assert len({canonical_form(g) for g in graphs}) == count


@pytest.mark.slow
def test_connected_cubic_count_14():
    assert sum(1 for _ in connected_cubic(14)) == 509


@pytest.mark.parametrize("n, count", sorted(THREE_CONNECTED.items()))
def test_three_connected_counts(n, count):
    assert sum(1 for _ in three_connected_cubic(n)) == count


def test_connectivity_values():
    assert connectivity(complete_graph(4)) == 3
    assert connectivity(cycle_graph(6)) == 2
    assert connectivity(petersen_graph()) == 3


@pytest.mark.parametrize("n", [3, 5, 18, 2])
def test_bad_cubic_orders(n):
    with pytest.raises(EnumerationError):
        list(connected_cubic(n))


def test_class_spec_parsing(tmp_path):
    assert GraphClassSpec.parse("trees").kind == "trees"
    assert GraphClassSpec.parse("cubic3").label() == "cubic3"
    path = tmp_path / "x.g6"
    write_graph6_file(path, [petersen_graph(), complete_graph(4)])
    spec = GraphClassSpec.parse(f"g6:{path}")
    assert spec.orders() == [4, 10]
    assert list(spec.graphs(10)) == [petersen_graph()]
    with pytest.raises(EnumerationError):
        GraphClassSpec.parse("planar")
