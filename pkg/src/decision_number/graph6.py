"""graph6 reader/writer (McKay's format, undirected simple graphs only)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    start = len(HEADER) if text.startswith(HEADER) else 0
    data = text[start:]
    if not data:
        raise Graph6Error("empty graph6 string", offset=start)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside printable range 63..126", offset=start + k)

    vals = [ord(ch) - 63 for ch in data]
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6Error("truncated order field", offset=start + len(vals))
        if vals[1] == 63:
            raise Graph6Error("orders above 258047 are not supported", offset=start + 1)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        body_offset = start + 4
    else:
        n = vals[0]
        body = vals[1:]
        body_offset = start + 1

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for order {n}, got {len(body)}",
            offset=body_offset + min(len(body), need),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", offset=body_offset + need - 1)
    return Graph(n, rows)


def iter_graph6_lines(lines) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blanks; errors carry the 1-based line number."""
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        if line == HEADER:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, offset=exc.offset, line=lineno) from None


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        yield from iter_graph6_lines(fh)


def write_graph6_file(path: str | Path, graphs) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count
