import json

import pytest

from decision_number.enumeration import GraphClassSpec, free_trees
from decision_number.graph6 import write_graph6_file
from decision_number.tables import (
    Checkpoint,
    TableRow,
    aggregate,
    default_workers,
    format_rows,
    parse_csv_rows,
    table_rows,
)


def test_merge_is_associative_and_sums_ties():
    a, b, c = TableRow.single(4, 0), TableRow.single(4, 2), TableRow.single(4, 0)
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    assert left == right == TableRow(4, 3, 0, 2, 2, 1)


def test_merge_with_infeasible():
    row = TableRow.single(1, None).merge(TableRow.single(1, 1))
    assert row == TableRow(1, 2, 1, 1, 1, 1)
    assert TableRow.empty(3).merge(TableRow.single(3, None)).min is None


def test_spot_rows():
    assert next(table_rows(GraphClassSpec("trees"), "bad", [9])).as_tuple() == (9, 47, 1, 14, 5, 6)
    assert next(table_rows(GraphClassSpec("trees"), "excellent", [11])).as_tuple() == (11, 235, 5, 1, 11, 43)
    assert next(table_rows(GraphClassSpec("cubic"), "good", [8])).as_tuple() == (8, 5, 4, 5, 4, 5)


def _csv(workers):
    rows = list(table_rows(GraphClassSpec("trees"), "nice", range(4, 12), workers))
    return format_rows(rows, "csv").encode()


def test_parallel_determinism():
    one = _csv(1)
    assert _csv(4) == one
    assert _csv(16) == one


class Interrupted(Exception):
    pass


def _exploding(graphs, after):
    for i, g in enumerate(graphs):
        if i == after:
            raise Interrupted
        yield g


@pytest.mark.parametrize("workers", [1, 3])
def test_checkpoint_resume_matches_uninterrupted(tmp_path, workers):
    n = 11
    clean = aggregate(free_trees(n), "bad", n, workers=workers)
    ck_path = tmp_path / "ck.json"
    key = "trees|bad|11"
    with pytest.raises(Interrupted):
        aggregate(_exploding(free_trees(n), 125), "bad", n, workers, Checkpoint(ck_path), key, batch=50)
    saved = json.loads(ck_path.read_text())[key]
    assert saved["position"] == 100 and not saved["done"]
    resumed = aggregate(free_trees(n), "bad", n, workers, Checkpoint(ck_path), key, batch=50)
    assert resumed == clean
    assert json.loads(ck_path.read_text())[key]["done"]
    # a finished key is served from the checkpoint without solving again
    assert aggregate(iter(()), "bad", n, 1, Checkpoint(ck_path), key) == clean


def test_witness_dump(tmp_path):
    path = tmp_path / "w.txt"
    list(table_rows(GraphClassSpec("trees"), "good", [1, 4], witness_path=path))
    lines = path.read_text().splitlines()
    assert lines[0] == "@ None infeasible"
    assert len(lines) == 3 and all(len(l.split()) == 3 for l in lines)


def test_g6_class(tmp_path):
    path = tmp_path / "t.g6"
    write_graph6_file(path, free_trees(9))
    rows = list(table_rows(GraphClassSpec.parse(f"g6:{path}"), "bad", [9]))
    assert rows[0].as_tuple() == (9, 47, 1, 14, 5, 6)


def test_formats_round_trip():
    rows = [TableRow(4, 2, 0, 1, 2, 1), TableRow(1, 1, None, 0, None, 0)]
    text = format_rows(rows, "csv")
    assert text.splitlines()[0] == "n,count,min,m,max,M"
    assert parse_csv_rows(text) == rows
    assert json.loads(format_rows(rows, "json"))[0]["M"] == 1
    md = format_rows(rows, "markdown", "title")
    assert "| 4 | 2 | 0 | 1 | 2 | 1 |" in md
    with pytest.raises(ValueError):
        format_rows(rows, "xml")


def test_default_workers(monkeypatch):
    monkeypatch.setenv("DECISION_NUMBER_WORKERS", "6")
    assert default_workers() == 6
    monkeypatch.setenv("DECISION_NUMBER_WORKERS", "zero")
    assert default_workers() == 1
