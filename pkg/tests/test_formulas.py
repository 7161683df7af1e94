from fractions import Fraction

import pytest

from decision_number.enumeration import connected_cubic
from decision_number.formulas import (
    bad_from_partition,
    beta_cycle,
    beta_path,
    check_bounds,
    excellent_path,
    is_petersen,
    max_tree_bad,
    mmm_partition,
)
from decision_number.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    prism_graph,
)
from decision_number.solver import evaluate, solve, solve_all


@pytest.mark.parametrize("n", range(3, 18))
def test_beta_path_cycle(n):
    assert solve(path_graph(n), "bad").value == beta_path(n)
    assert solve(cycle_graph(n), "bad").value == beta_cycle(n)


@pytest.mark.parametrize("n", range(2, 18))
def test_excellent_path(n):
    assert solve(path_graph(n), "excellent").value == excellent_path(n)


def test_small_values():
    assert [max_tree_bad(n) for n in (3, 4, 9, 14, 15)] == [1, 2, 5, 10, 9]
    assert beta_path(6) == 2 and beta_cycle(6) == -2
    with pytest.raises(ValueError):
        max_tree_bad(2)


def test_is_petersen():
    assert is_petersen(petersen_graph().relabel([3, 1, 4, 0, 9, 2, 6, 5, 8, 7]))
    assert sum(is_petersen(g) for g in connected_cubic(10)) == 1


def test_bound_suite_clean_on_prism():
    g = prism_graph()
    report = check_bounds(g, solve_all(g))
    assert report.violations == []
    names = {c.name for c in report.checks}
    assert "cubic: 3 good >= n" in names and "bad <= n/k (3-regular)" in names


def test_bound_suite_catches_wrong_values():
    g = complete_graph(4)
    vals = {k: v + 2 for k, v in solve_all(g).items()}
    assert check_bounds(g, vals).violations


def test_petersen_exception_check():
    g = petersen_graph()
    report = check_bounds(g, solve_all(g))
    by_name = {c.name: c for c in report.checks}
    exc = by_name["cubic: excellent <= 3n/4 fails only for Petersen"]
    assert exc.holds and exc.left == 32 and exc.right == 30
    assert "cubic: 4 excellent <= 3n" not in by_name


def test_petersen_breaks_the_cited_five_sevenths_excellent_bound():
    # 7 * 8 = 56 > 50: the cited cubic bound fails on Petersen, matching its
    # published table value of 8 at n = 10
    report = check_bounds(petersen_graph(), solve_all(petersen_graph()))
    assert [c.name for c in report.violations] == ["cubic: 7 excellent <= 5n"]
    assert report.violations[0].left == Fraction(56)


def test_cited_excellent_bound_fails_exactly_at_published_maxima():
    # The only violations up to n = 12 are of 7 excellent <= 5n, by the two
    # order-8 graphs with excellent value 6 and by Petersen (value 8); both
    # values are the published maxima for those orders.
    bad = []
    for n in range(4, 13, 2):
        for g in connected_cubic(n):
            for c in check_bounds(g, solve_all(g)).violations:
                bad.append((n, is_petersen(g), c.name, int(c.left)))
    assert bad == [
        (8, False, "cubic: 7 excellent <= 5n", 42),
        (8, False, "cubic: 7 excellent <= 5n", 42),
        (10, True, "cubic: 7 excellent <= 5n", 56),
    ]


@pytest.mark.parametrize("g", [prism_graph(), complete_bipartite(3, 3)])
def test_partition_exists_on_six_vertex_cubic(g):
    parts = mmm_partition(g)
    assert parts is not None and len(parts) == 1
    f = bad_from_partition(g, parts)
    ev = evaluate(g, "bad", f)
    assert ev.valid and ev.total == 2


def test_strict_reading_rejects_prism():
    assert mmm_partition(prism_graph(), strict=True) is None
    assert mmm_partition(complete_bipartite(3, 3), strict=True) is None


def test_partition_absent_when_not_divisible_by_six():
    assert mmm_partition(petersen_graph()) is None


def test_partition_requires_cubic():
    with pytest.raises(GraphError):
        mmm_partition(cycle_graph(6))


@pytest.mark.parametrize("n", [6, 12])
def test_equivalence_over_connected_cubic(n):
    attainers = 0
    for g in connected_cubic(n):
        reaches = 3 * solve(g, "bad").value == n
        attainers += reaches
        assert reaches == (mmm_partition(g) is not None)
    assert attainers == {6: 2, 12: 44}[n]
