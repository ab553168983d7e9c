"""Published brick tables, stored exactly as printed, and their recomputation.

Fixture values are never corrected here. :func:`reproduce_table` rebuilds each
row from its printed inputs with the matching constructor and reports every
cell where the printed value differs from the recomputed one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..constructors import corollary1, corollary2, lift_pair, sounderson, theorem1, theorem2, theorem3

_EDGES = ("a", "b", "c", "d", "e", "f")

# Leg-pair tables: u0 v0 | u1 v1 w1 | u2 v2 w2 | a b c d e f
_T1 = [
    (7, 20, 7, 24, 25, 99, 20, 101, 693, 140, 480, 707, 843, 500),
    (33, 8, 99, 20, 101, 7, 24, 25, 231, 792, 160, 825, 281, 808),
    (23, 12, 483, 44, 485, 275, 252, 373, 6325, 5796, 528, 8579, 6347, 5820),
    (17, 12, 85, 132, 157, 11, 60, 61, 187, 1020, 1584, 1037, 1595, 1884),
    (1, 4, 11, 60, 61, 117, 44, 125, 117, 44, 240, 125, 267, 244),
]
_T3 = [
    (11, 17, 11, 60, 61, 17, 144, 145, 187, 1020, 1584, 1037, 1595, 1884),
    (21, 55, 21, 20, 29, 55, 48, 73, 1155, 1100, 1008, 1595, 1533, 1492),
    (11, 39, 11, 60, 61, 39, 80, 89, 429, 2340, 880, 2379, 979, 2500),
    (11, 23, 275, 252, 373, 575, 48, 577, 6347, 5796, 528, 8579, 6347, 5820),
    (21, 25, 483, 44, 485, 575, 48, 577, 12075, 1100, 1008, 12125, 12117, 1492),
]
_T5 = [
    (3, 4, 11, 60, 61, 39, 80, 89, 117, 44, 240, 125, 267, 244),
    (5, 12, 21, 20, 29, 55, 48, 73, 275, 252, 240, 373, 365, 348),
    (5, 12, 11, 60, 61, 17, 144, 145, 85, 132, 720, 157, 725, 732),
    (3, 44, 17, 144, 145, 65, 2112, 2113, 195, 748, 6336, 773, 6339, 6380),
    (11, 20, 117, 44, 125, 39, 80, 89, 429, 2340, 880, 2379, 979, 2500),
]
# Pair tables: u1 v1 w1 | u2 v2 w2 | a b c d e f. Only the first row of T2 is printed.
_T2 = [
    (7, 24, 25, 99, 20, 101, 693, 140, 480, 707, 843, 500),
]
_T4 = [
    (11, 60, 61, 17, 144, 145, 187, 1020, 1584, 1037, 1595, 1884),
    (21, 20, 29, 55, 48, 73, 1155, 1100, 1008, 1595, 1533, 1492),
    (11, 60, 61, 39, 80, 89, 429, 2340, 880, 2379, 979, 2500),
    (275, 252, 373, 575, 48, 577, 158125, 144900, 13200, 214475, 158675, 145500),
    (483, 44, 485, 575, 48, 577, 277725, 25300, 23184, 278875, 278691, 34316),
]
# Lift table: u0 v0 w0 | u1 v1 w1 | u2 v2 w2 | a b c d e f
_T6 = [
    (3, 4, 5, 11, 60, 61, 39, 80, 89, 117, 44, 240, 125, 267, 244),
    (5, 12, 13, 69, 260, 269, 407, 624, 745, 2035, 828, 3120, 2197, 3725, 3228),
    (15, 8, 17, 611, 1020, 1189, 33, 544, 545, 495, 4888, 8160, 4913, 8175, 9512),
    (7, 24, 25, 429, 700, 821, 1679, 2400, 2929, 11753, 10296, 16800, 15625, 20503, 19704),
    (21, 20, 29, 923, 2436, 2605, 759, 2320, 2441, 15939, 18460, 48720, 24389, 51261, 52100),
]

_LEG_COLS = ("u0", "v0", "u1", "v1", "w1", "u2", "v2", "w2") + _EDGES
_PAIR_COLS = ("u1", "v1", "w1", "u2", "v2", "w2") + _EDGES
_LIFT_COLS = ("u0", "v0", "w0", "u1", "v1", "w1", "u2", "v2", "w2") + _EDGES

TABLES = {
    "T1": ("th1", _LEG_COLS, _T1),
    "T2": ("cor1", _PAIR_COLS, _T2),
    "T3": ("th2", _LEG_COLS, _T3),
    "T4": ("cor2", _PAIR_COLS, _T4),
    "T5": ("th3", _LEG_COLS, _T5),
    "T6": ("sounderson", _LIFT_COLS, _T6),
}

TABLE_IDS = tuple(TABLES)

# Printed rows of T2 after the first are blank.
BLANK_ROWS = {"T2": (2, 3, 4, 5)}


@dataclass
class RowDiff:
    table: str
    row: int
    expected: dict[str, int]
    computed: dict[str, int] | None
    diff: list[tuple[str, int, int | None]] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.diff


def _compute(constructor: str, printed: dict[str, int]) -> dict[str, int] | None:
    p = printed
    if constructor == "sounderson":
        t0 = (p["u0"], p["v0"], p["w0"])
        t1, t2 = lift_pair(t0)
        brick = sounderson(t0)
        out = dict(zip(("u1", "v1", "w1", "u2", "v2", "w2"), (*t1, *t2)))
        out["u0"], out["v0"], out["w0"] = t0
    else:
        t1 = (p["u1"], p["v1"], p["w1"])
        t2 = (p["u2"], p["v2"], p["w2"])
        if constructor in ("cor1", "cor2"):
            brick = (corollary1 if constructor == "cor1" else corollary2)(t1, t2)
        else:
            build = {"th1": theorem1, "th2": theorem2, "th3": theorem3}[constructor]
            brick = build((p["u0"], p["v0"]), t1, t2)
        out = {k: p[k] for k in printed if k not in _EDGES}
        if brick is None:
            return None
    out.update(zip(_EDGES, brick.edges + brick.diagonals))
    return out


def reproduce_table(table_id: str) -> list[RowDiff]:
    """Rebuild every printed row of a table and diff it cell by cell."""
    try:
        constructor, cols, rows = TABLES[table_id]
    except KeyError:
        raise ValueError(f"unknown table {table_id!r}; expected one of {', '.join(TABLE_IDS)}") from None
    out = []
    for k, row in enumerate(rows, start=1):
        expected = dict(zip(cols, row))
        computed = _compute(constructor, expected)
        if computed is None:
            diff = [(c, expected[c], None) for c in _EDGES]
        else:
            diff = [(c, expected[c], computed[c]) for c in cols if expected[c] != computed[c]]
        out.append(RowDiff(table_id, k, expected, computed, diff))
    return out
