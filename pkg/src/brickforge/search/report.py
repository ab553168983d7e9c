"""Scan hits and reports, with exact-decimal record encoding.

Every integer in a record is written as a decimal string so that JSON and
CSV consumers never round it through a float.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterable

from ..bricks import Brick
from ..constructors import PerfectCuboid


class ScanKind(str, enum.Enum):
    CONJECTURE1 = "conjecture1"
    CONJECTURE2 = "conjecture2"
    PROBLEM1 = "problem1"
    PROBLEM2 = "problem2"
    PROBLEM3 = "problem3"
    COR1 = "cor1"
    COR2 = "cor2"
    TH1 = "th1"
    TH2 = "th2"
    TH3 = "th3"

    @property
    def is_conjecture(self) -> bool:
        return self in (ScanKind.CONJECTURE1, ScanKind.CONJECTURE2)

    @property
    def is_problem(self) -> bool:
        return self.value.startswith("problem")

    @property
    def is_corollary(self) -> bool:
        return self in (ScanKind.COR1, ScanKind.COR2)

    @property
    def is_theorem(self) -> bool:
        return self in (ScanKind.TH1, ScanKind.TH2, ScanKind.TH3)

    @property
    def needs_leg_bound(self) -> bool:
        return self.is_theorem or self.is_problem

    @property
    def dedupes(self) -> bool:
        return self.is_theorem or self.is_corollary


Triple = tuple[int, int, int]


@dataclass(frozen=True)
class Hit:
    """One confirmed record from a scan.

    ``index`` is the outer-loop position of ``t1`` in the triple enumeration.
    Conjecture hits keep ``t1``/``t2`` in the orientation that solved the
    system; for the second conjecture ``t1`` plays ``(x, y, z)``.
    """

    index: int
    t1: Triple
    t2: Triple
    leg_pair: tuple[int, int] | None = None
    brick: Brick | None = None
    cuboid: PerfectCuboid | None = None
    roots: tuple[int, ...] = ()
    product_holds: bool | None = None

    def to_record(self) -> dict[str, Any]:
        rec: dict[str, Any] = {
            "type": "hit",
            "index": str(self.index),
            "t1": _join(self.t1),
            "t2": _join(self.t2),
        }
        if self.leg_pair is not None:
            rec["leg_pair"] = _join(self.leg_pair)
        if self.brick is not None:
            rec["brick"] = _join(tuple(self.brick))
        if self.cuboid is not None:
            c = self.cuboid
            rec["cuboid"] = _join((c.a, c.b, c.c, c.d, c.e, c.f, c.g))
        if self.roots:
            rec["roots"] = _join(self.roots)
        if self.product_holds is not None:
            rec["product_holds"] = "true" if self.product_holds else "false"
        return rec

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "Hit":
        brick = cuboid = None
        if rec.get("brick"):
            brick = Brick(*_split(rec["brick"]))
        if rec.get("cuboid"):
            cuboid = PerfectCuboid(*_split(rec["cuboid"]))
        product = rec.get("product_holds")
        return cls(
            index=int(rec["index"]),
            t1=_split(rec["t1"]),  # type: ignore[arg-type]
            t2=_split(rec["t2"]),  # type: ignore[arg-type]
            leg_pair=_split(rec["leg_pair"]) if rec.get("leg_pair") else None,  # type: ignore[arg-type]
            brick=brick,
            cuboid=cuboid,
            roots=_split(rec["roots"]) if rec.get("roots") else (),
            product_holds=None if product in (None, "") else product == "true",
        )


@dataclass
class ScanReport:
    scan_kind: ScanKind
    w_bound: int
    leg_bound: int | None
    triples: int
    pairs_examined: int
    candidates: int
    hits: list[Hit] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def counterexamples(self) -> list[Hit]:
        return self.hits if self.scan_kind.is_conjecture else []

    @property
    def violations(self) -> list[Hit]:
        """Problem-scan tuples where the square holds but the product does not."""
        return [h for h in self.hits if h.product_holds is False]

    def summary_record(self) -> dict[str, Any]:
        # Wall-clock time is left out so the record is reproducible.
        return {
            "type": "report",
            "scan_kind": self.scan_kind.value,
            "w_bound": str(self.w_bound),
            "leg_bound": "" if self.leg_bound is None else str(self.leg_bound),
            "triples": str(self.triples),
            "pairs_examined": str(self.pairs_examined),
            "candidates": str(self.candidates),
            "hits": str(len(self.hits)),
            "violations": str(len(self.violations)) if self.scan_kind.is_problem else "",
        }

    def records(self) -> list[dict[str, Any]]:
        return [h.to_record() for h in self.hits] + [self.summary_record()]

    @classmethod
    def from_records(cls, records: Iterable[dict[str, Any]]) -> "ScanReport":
        hits = []
        summary = None
        for rec in records:
            if rec["type"] == "hit":
                hits.append(Hit.from_record(rec))
            elif rec["type"] == "report":
                summary = rec
        if summary is None:
            raise ValueError("record stream has no report line")
        if int(summary["hits"]) != len(hits):
            raise ValueError("report hit count disagrees with the hit lines")
        return cls(
            scan_kind=ScanKind(summary["scan_kind"]),
            w_bound=int(summary["w_bound"]),
            leg_bound=int(summary["leg_bound"]) if summary["leg_bound"] else None,
            triples=int(summary["triples"]),
            pairs_examined=int(summary["pairs_examined"]),
            candidates=int(summary["candidates"]),
            hits=hits,
        )

    def same_result(self, other: "ScanReport") -> bool:
        """Equality ignoring wall-clock time."""
        return self.records() == other.records()


def _join(values: Iterable[int]) -> str:
    return ",".join(str(int(v)) for v in values)


def _split(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


# Union of every key a record may carry, in CSV column order.
RECORD_FIELDS = [
    "type",
    "index",
    "t1",
    "t2",
    "leg_pair",
    "brick",
    "cuboid",
    "roots",
    "product_holds",
    "scan_kind",
    "w_bound",
    "leg_bound",
    "triples",
    "pairs_examined",
    "candidates",
    "hits",
    "violations",
]
