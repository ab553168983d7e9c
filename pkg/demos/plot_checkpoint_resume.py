"""
Stopping and resuming a scan
============================

A scan can stop after a number of outer rows and pick up later from its
checkpoint file. The resumed report is the same as an uninterrupted one.
"""

import tempfile
from pathlib import Path

from brickforge.search import ScanInterrupted, run_scan

fresh = run_scan("conjecture1", 500)

path = Path(tempfile.mkdtemp()) / "conjecture1.json"
try:
    run_scan("conjecture1", 500, checkpoint=path, stop_after=fresh.triples // 2)
except ScanInterrupted as exc:
    print("stopped at outer index", exc.cursor)

resumed = run_scan("conjecture1", 500, checkpoint=path)
print(resumed.same_result(fresh))

###############################################################################
# Worker count does not change the report either
print(run_scan("cor2", 1500, workers=4).same_result(run_scan("cor2", 1500)))
