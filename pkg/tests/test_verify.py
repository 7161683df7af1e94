from decision_number.enumeration import GraphClassSpec
from decision_number.solver import solve_all
from decision_number.verify import compare_cubic_classes, verify_class


def test_trees_clean():
    report = verify_class(GraphClassSpec("trees"), range(1, 11))
    assert report.ok and report.graphs == 201
    names = set(report.tallies)
    assert {"tree: bad >= 0", "tree: nice >= 0", "tree: excellent >= n-2ceil((n-4)/3)",
            "formula: max bad over trees = n-2ceil((n+6)/10)"} <= names


def test_fault_injection_detected():
    def corrupted(g):
        return {k: (v + 2 if v is not None else None) for k, v in solve_all(g).items()}

    report = verify_class(GraphClassSpec("trees"), range(4, 8), corrupted)
    assert not report.ok
    assert report.tallies["formula: max bad over trees = n-2ceil((n+6)/10)"].violations == 4


def test_cubic_report_structure():
    report = verify_class(GraphClassSpec("cubic"), [4, 6, 8])
    t = report.tallies
    assert t["characterisation: bad = n/3 iff double-star partition"].violations == 0
    assert t["construction: excellent from 2-distance colouring"].applied == 8
    # the two order-8 graphs with excellent value 6 exceed the cited 5n/7
    assert t["cubic: 7 excellent <= 5n"].violations == 2


def test_class_comparison_at_10():
    rows = {c.variant: c for c in compare_cubic_classes([10])}
    assert rows["excellent"].connected.count == 19
    assert rows["excellent"].three_connected.count == 14
    assert rows["excellent"].count_match == "3-connected"
    assert rows["excellent"].published == rows["excellent"].three_connected
    assert all(c.extremes_attained for c in rows.values())
