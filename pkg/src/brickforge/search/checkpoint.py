"""Resumable scan state stored as a single JSON document.

The file is rewritten atomically (write to a sibling temp file, then
``os.replace``), so a crash mid-write leaves the previous checkpoint intact.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import BoundMismatch, CorruptCheckpoint
from .report import Hit, ScanKind

FORMAT_VERSION = 1


@dataclass
class Checkpoint:
    """Scan progress. ``cursor`` is the next outer index to process."""

    scan_kind: ScanKind
    w_bound: int
    leg_bound: int | None
    cursor: int = 0
    candidates: int = 0
    hits: list[Hit] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "scan_kind": self.scan_kind.value,
            "w_bound": str(self.w_bound),
            "leg_bound": None if self.leg_bound is None else str(self.leg_bound),
            "cursor": str(self.cursor),
            "candidates": str(self.candidates),
            "hits": [h.to_record() for h in self.hits],
        }

    def check_matches(self, kind: ScanKind, w_bound: int, leg_bound: int | None) -> None:
        if (self.scan_kind, self.w_bound, self.leg_bound) != (kind, w_bound, leg_bound):
            raise BoundMismatch(
                f"checkpoint is for {self.scan_kind.value} w_bound={self.w_bound} "
                f"leg_bound={self.leg_bound}, not {kind.value} w_bound={w_bound} leg_bound={leg_bound}"
            )


def checkpoint_save(path: str | os.PathLike, cp: Checkpoint) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(cp.to_json(), fh, indent=1)
            fh.write("\n")
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def checkpoint_load(path: str | os.PathLike) -> Checkpoint:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CorruptCheckpoint(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise CorruptCheckpoint(f"{path}: top level is not an object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise CorruptCheckpoint(f"{path}: unsupported format_version {doc.get('format_version')!r}")
    try:
        leg = doc["leg_bound"]
        cp = Checkpoint(
            scan_kind=ScanKind(doc["scan_kind"]),
            w_bound=int(doc["w_bound"]),
            leg_bound=None if leg is None else int(leg),
            cursor=int(doc["cursor"]),
            candidates=int(doc["candidates"]),
            hits=[Hit.from_record(r) for r in doc["hits"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptCheckpoint(f"{path}: bad or missing field ({exc})") from exc
    if cp.cursor < 0 or cp.candidates < 0:
        raise CorruptCheckpoint(f"{path}: negative counter")
    return cp


def checkpoint_resume(
    path: str | os.PathLike, kind: ScanKind, w_bound: int, leg_bound: int | None
) -> Checkpoint:
    """Load ``path`` and confirm it belongs to the requested scan."""
    cp = checkpoint_load(path)
    cp.check_matches(kind, w_bound, leg_bound)
    return cp
