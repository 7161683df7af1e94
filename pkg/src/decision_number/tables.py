"""Exhaustive min/max tables over graph classes, with parallel workers and
resumable checkpoints."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass
from itertools import islice
from multiprocessing import get_context
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .enumeration import GraphClassSpec
from .graph6 import emit_graph6, parse_graph6
from .solver import Variant, get_variant, solve

BATCH = 1000
WORKERS_ENV = "DECISION_NUMBER_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class TableRow:
    n: int
    count: int
    min: int | None
    m: int
    max: int | None
    M: int

    @classmethod
    def empty(cls, n: int) -> "TableRow":
        return cls(n, 0, None, 0, None, 0)

    @classmethod
    def single(cls, n: int, value: int | None) -> "TableRow":
        if value is None:  # infeasible graph: counted, but has no value
            return cls(n, 1, None, 0, None, 0)
        return cls(n, 1, value, 1, value, 1)

    def merge(self, other: "TableRow") -> "TableRow":
        """Associative merge; ties on an extreme add their attainer counts."""
        lo, m = _extreme(self.min, self.m, other.min, other.m, lambda a, b: a < b)
        hi, big = _extreme(self.max, self.M, other.max, other.M, lambda a, b: a > b)
        return TableRow(self.n, self.count + other.count, lo, m, hi, big)

    def as_tuple(self) -> tuple:
        return (self.n, self.count, self.min, self.m, self.max, self.M)


def _extreme(a, ca, b, cb, better):
    if a is None:
        return b, cb
    if b is None or better(a, b):
        return a, ca
    if better(b, a):
        return b, cb
    return a, ca + cb


def _context():
    try:
        return get_context("fork")
    except ValueError:
        return get_context("spawn")


def _solve_line(args: tuple[str, str]) -> tuple[int | None, tuple[int, ...] | None]:
    line, variant = args
    out = solve(parse_graph6(line), variant)
    return out.value, out.witness


class Checkpoint:
    """JSON file mapping ``class|variant|n`` to finished rows or in-progress state."""

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path else None
        self.data: dict = {}
        if self.path and self.path.exists():
            self.data = json.loads(self.path.read_text())

    def get(self, key: str) -> dict | None:
        return self.data.get(key)

    def put(self, key: str, entry: dict) -> None:
        if not self.path:
            return
        self.data[key] = entry
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(self.data, indent=1, sort_keys=True))
        os.replace(tmp, self.path)


def aggregate(
    graphs: Iterable,
    variant: Variant | str,
    n: int,
    workers: int = 1,
    checkpoint: Checkpoint | None = None,
    key: str | None = None,
    witness_file: io.TextIOBase | None = None,
    batch: int = BATCH,
) -> TableRow:
    """Solve every graph of a deterministic stream and fold the values into a row."""
    variant = get_variant(variant)
    row = TableRow.empty(n)
    position = 0
    if checkpoint is not None and key is not None:
        saved = checkpoint.get(key)
        if saved is not None:
            if saved.get("done"):
                return TableRow(**saved["row"])
            position = saved["position"]
            row = TableRow(**saved["row"])
    stream = islice(iter(graphs), position, None)
    pool = _context().Pool(workers) if workers > 1 else None
    try:
        while True:
            chunk = [emit_graph6(g) for g in islice(stream, batch)]
            if not chunk:
                break
            jobs = [(line, variant.name) for line in chunk]
            if pool is None:
                results = [_solve_line(j) for j in jobs]
            else:
                results = pool.map(_solve_line, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            for line, (value, witness) in zip(chunk, results):
                row = row.merge(TableRow.single(n, value))
                if witness_file is not None:
                    signs = "".join("+" if x > 0 else "-" for x in witness) if witness else "infeasible"
                    witness_file.write(f"{line} {value} {signs}\n")
            position += len(chunk)
            if checkpoint is not None and key is not None:
                checkpoint.put(key, {"position": position, "row": asdict(row), "done": False})
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if checkpoint is not None and key is not None:
        checkpoint.put(key, {"position": position, "row": asdict(row), "done": True})
    return row


def table_rows(
    spec: GraphClassSpec,
    variant: Variant | str,
    orders: Iterable[int],
    workers: int = 1,
    checkpoint_path: str | Path | None = None,
    witness_path: str | Path | None = None,
    graphs_for: Callable[[int], Iterator] | None = None,
) -> Iterator[TableRow]:
    variant = get_variant(variant)
    checkpoint = Checkpoint(checkpoint_path) if checkpoint_path else None
    witness_file = open(witness_path, "a") if witness_path else None
    try:
        for n in orders:
            graphs = graphs_for(n) if graphs_for else spec.graphs(n)
            key = f"{spec.label()}|{variant.name}|{n}"
            yield aggregate(graphs, variant, n, workers, checkpoint, key, witness_file)
    finally:
        if witness_file is not None:
            witness_file.close()


# --- formatting -----------------------------------------------------------------------

COLUMNS = ("n", "count", "min", "m", "max", "M")


def _cell(x) -> str:
    return "" if x is None else str(x)


def format_rows(rows: list[TableRow], fmt: str, title: str = "") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for r in rows:
            writer.writerow([_cell(x) for x in r.as_tuple()])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
    if fmt == "markdown":
        lines = []
        if title:
            lines += [f"**{title}**", ""]
        lines.append("| " + " | ".join(COLUMNS) + " |")
        lines.append("|" + "---|" * len(COLUMNS))
        for r in rows:
            lines.append("| " + " | ".join(_cell(x) for x in r.as_tuple()) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_csv_rows(text: str) -> list[TableRow]:
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for rec in reader:
        vals = {k: (int(v) if v != "" else None) for k, v in rec.items()}
        out.append(TableRow(**vals))
    return out
