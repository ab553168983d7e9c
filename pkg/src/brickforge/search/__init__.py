"""Bounded scans, table reproduction and checkpointing."""

from .checkpoint import Checkpoint, checkpoint_load, checkpoint_resume, checkpoint_save
from .report import Hit, ScanKind, ScanReport
from .scans import (
    ScanInterrupted,
    max_safe_w_bound,
    run_scan,
    scan_conjecture1,
    scan_conjecture2,
    scan_corollary,
    scan_problem,
    scan_theorem,
    verify_hit,
)
from .tables import BLANK_ROWS, TABLE_IDS, TABLES, RowDiff, reproduce_table

__all__ = [
    "Checkpoint",
    "checkpoint_load",
    "checkpoint_resume",
    "checkpoint_save",
    "Hit",
    "ScanKind",
    "ScanReport",
    "ScanInterrupted",
    "max_safe_w_bound",
    "run_scan",
    "scan_conjecture1",
    "scan_conjecture2",
    "scan_corollary",
    "scan_problem",
    "scan_theorem",
    "verify_hit",
    "BLANK_ROWS",
    "TABLES",
    "TABLE_IDS",
    "RowDiff",
    "reproduce_table",
]
