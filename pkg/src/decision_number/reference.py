"""Published exhaustive-search rows (n, class size, min, m, max, M) for the
four decision numbers over trees (n = 4..17) and cubic graphs (n = 4..18).

The cubic class sizes from n = 10 on are those of 3-connected cubic graphs;
see ``compare_cubic_classes`` in ``verify``.
"""

from __future__ import annotations

from .tables import TableRow

_TREES = {
    "bad": """
4 2 0 1 2 1
5 3 1 3 1 3
6 6 0 1 2 5
7 11 1 6 3 5
8 23 0 3 4 7
9 47 1 14 5 6
10 106 0 4 6 7
11 235 1 36 7 4
12 551 0 11 8 3
13 1301 1 97 9 1
14 3159 0 21 10 1
15 7741 1 276 9 96
16 19320 0 57 10 86
17 48629 1 810 11 70
""",
    "nice": """
4 2 0 2 0 2
5 3 1 3 1 3
6 6 0 3 2 3
7 11 1 10 3 1
8 23 0 8 4 1
9 47 1 33 3 14
10 106 0 19 4 9
11 235 1 122 5 5
12 551 0 58 6 2
13 1301 1 471 7 1
14 3159 0 177 6 54
15 7741 1 1888 7 27
16 19320 0 612 8 13
17 48629 1 7771 9 4
""",
    "good": """
4 2 2 1 4 1
5 3 3 2 5 1
6 6 2 2 6 1
7 11 3 5 7 2
8 23 2 3 8 2
9 47 3 11 9 4
10 106 2 6 10 6
11 235 3 28 11 9
12 551 2 11 12 15
13 1301 3 67 13 25
14 3159 2 23 14 42
15 7741 3 171 15 70
16 19320 2 47 16 123
17 48629 3 433 17 213
""",
    "excellent": """
4 2 4 2 4 2
5 3 3 1 5 2
6 6 4 2 6 4
7 11 5 6 7 5
8 23 4 1 8 10
9 47 5 4 9 14
10 106 6 16 10 27
11 235 5 1 11 43
12 551 6 7 12 82
13 1301 7 42 13 140
14 3159 6 1 14 269
15 7741 7 12 15 486
16 19320 8 99 16 939
17 48629 7 1 17 1765
""",
}

_CUBIC = {
    "bad": """
4 1 0 1 0 1
6 2 2 2 2 2
8 5 0 2 2 3
10 14 2 14 2 14
12 57 0 1 4 31
14 341 2 120 4 221
16 2828 0 2 4 2805
18 30468 2 82 6 8166
""",
    "nice": """
4 1 0 1 0 1
6 2 -2 2 -2 2
8 5 -2 1 0 4
10 14 -2 14 -2 14
12 57 -2 34 0 23
14 341 -2 341 -2 341
16 2828 -2 2299 0 529
18 30468 -2 30468 -2 30468
""",
    "good": """
4 1 2 1 2 1
6 2 2 2 2 2
8 5 4 5 4 5
10 14 4 8 6 6
12 57 4 31 8 1
14 341 6 338 10 1
16 2828 6 1718 8 1110
18 30468 6 8166 10 121
""",
    "excellent": """
4 1 2 1 2 1
6 2 4 2 4 2
8 5 4 3 6 2
10 14 6 13 8 1
12 57 6 25 8 32
14 341 8 335 10 6
16 2828 8 795 10 2033
18 30468 10 29692 12 776
""",
}


def _parse(block: str) -> dict[int, TableRow]:
    rows = {}
    for line in block.strip().splitlines():
        n, count, lo, m, hi, big = map(int, line.split())
        rows[n] = TableRow(n, count, lo, m, hi, big)
    return rows


TREE_ROWS = {variant: _parse(block) for variant, block in _TREES.items()}
CUBIC_ROWS = {variant: _parse(block) for variant, block in _CUBIC.items()}


def reference_row(kind: str, variant: str, n: int) -> TableRow | None:
    table = TREE_ROWS if kind == "trees" else CUBIC_ROWS
    return table[variant].get(n)
