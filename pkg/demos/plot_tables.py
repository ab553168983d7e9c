"""
Recomputing the published tables
================================

Fixture rows are kept as printed. Each row is rebuilt from its inputs and
any disagreeing cell is reported.
"""

from brickforge.search import TABLE_IDS, reproduce_table

for tid in TABLE_IDS:
    rows = reproduce_table(tid)
    print(tid, sum(r.matches for r in rows), "/", len(rows))
    for r in rows:
        for col, printed, computed in r.diff:
            print("  row", r.row, col, "printed", printed, "computed", computed)
