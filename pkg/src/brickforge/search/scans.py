"""Bounded exhaustive scans over pairs of primitive triples.

All scans share one driver. The outer loop runs over the index of the first
triple in the canonical ``(w, u)`` enumeration; rows are farmed out to worker
processes in contiguous chunks and merged back strictly in index order, so the
report never depends on the worker count. The outer index doubles as the
checkpoint cursor.
"""

from __future__ import annotations

import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable

from ..arith import NAT_MAX, perfect_square
from ..bricks import verify_brick
from ..constructors import corollary1, corollary2, perfect_from_counterexample, theorem1, theorem2, theorem3
from ..errors import BrickforgeError, InvalidParams, UnsafeBound, VerificationFailure
from .checkpoint import Checkpoint, checkpoint_resume, checkpoint_save
from .kernels import choose_engine, get_space, max_intermediate, problem_product, problem_square, run_rows
from .report import Hit, ScanKind, ScanReport

log = logging.getLogger(__name__)

__all__ = [
    "ScanInterrupted",
    "run_scan",
    "scan_corollary",
    "scan_theorem",
    "scan_conjecture1",
    "scan_conjecture2",
    "scan_problem",
    "max_safe_w_bound",
    "verify_hit",
]

_ALIASES = {
    "corollary1": "cor1",
    "corollary2": "cor2",
    "theorem1": "th1",
    "theorem2": "th2",
    "theorem3": "th3",
    "p1": "problem1",
    "p2": "problem2",
    "p3": "problem3",
}


class ScanInterrupted(BrickforgeError):
    """Raised when a scan stops early on request; its checkpoint was saved."""

    def __init__(self, cursor: int, path: str | None):
        super().__init__(f"scan stopped at outer index {cursor}")
        self.cursor = cursor
        self.path = path


def as_kind(kind: ScanKind | str) -> ScanKind:
    if isinstance(kind, ScanKind):
        return kind
    return ScanKind(_ALIASES.get(kind, kind))


def max_safe_w_bound(kind: ScanKind | str, leg_bound: int | None = None) -> int:
    """Largest ``w_bound`` whose scan stays inside the 127-bit envelope."""
    kind = as_kind(kind)
    if kind.needs_leg_bound:
        w = math.isqrt(NAT_MAX // (2 * leg_bound * leg_bound))  # type: ignore[operator]
    else:
        w = math.isqrt(math.isqrt(NAT_MAX))
    while max_intermediate(kind, w + 1, leg_bound) <= NAT_MAX:
        w += 1
    while max_intermediate(kind, w, leg_bound) > NAT_MAX:
        w -= 1
    return w


def _validate(kind: ScanKind, w_bound: int, leg_bound: int | None) -> int | None:
    if w_bound < 5:
        raise InvalidParams(f"w_bound must be at least 5, got {w_bound}")
    if kind.needs_leg_bound:
        if leg_bound is None or leg_bound < 1:
            raise InvalidParams(f"{kind.value} needs leg_bound >= 1")
    else:
        leg_bound = None
    if max_intermediate(kind, w_bound, leg_bound) > NAT_MAX:
        safe = max_safe_w_bound(kind, leg_bound)
        raise UnsafeBound(
            f"w_bound={w_bound} overflows 127-bit arithmetic for {kind.value}; largest safe w_bound is {safe}",
            safe,
        )
    return leg_bound


def _hit_key(hit: Hit) -> tuple[int, ...]:
    edges = hit.brick.edges  # type: ignore[union-attr]
    g = math.gcd(*edges)
    return tuple(sorted(x // g for x in edges))


def _work(args: tuple) -> tuple[list[Hit], int]:
    kind, w_bound, leg_bound, engine, lo, hi = args
    return run_rows(get_space(kind, w_bound, leg_bound, engine), lo, hi)


def run_scan(
    kind: ScanKind | str,
    w_bound: int,
    leg_bound: int | None = None,
    *,
    workers: int = 1,
    checkpoint: str | os.PathLike | None = None,
    stop_after: int | None = None,
    engine: str = "auto",
    dedupe: bool | None = None,
    on_hit: Callable[[Hit], None] | None = None,
    checkpoint_interval: float = 30.0,
) -> ScanReport:
    """Run (or resume) a scan and return its report.

    If ``checkpoint`` names an existing file the scan resumes from it; the file
    is kept up to date while the scan runs. ``stop_after`` processes at most
    that many outer rows, saves, and raises :class:`ScanInterrupted`.
    ``on_hit`` sees every reported hit in final order, including hits restored
    from a checkpoint.
    """
    kind = as_kind(kind)
    leg_bound = _validate(kind, w_bound, leg_bound)
    if dedupe is None:
        dedupe = kind.dedupes
    engine = choose_engine(kind, w_bound, leg_bound, engine)
    space = get_space(kind, w_bound, leg_bound, engine)
    n = space.n

    path = Path(checkpoint) if checkpoint is not None else None
    if path is not None and path.exists():
        cp = checkpoint_resume(path, kind, w_bound, leg_bound)
        log.info("resuming %s from outer index %d of %d", kind.value, cp.cursor, n)
    else:
        cp = Checkpoint(kind, w_bound, leg_bound)

    seen = {_hit_key(h) for h in cp.hits} if dedupe else set()
    if on_hit is not None:
        for h in cp.hits:
            on_hit(h)

    end = n if stop_after is None else min(n, cp.cursor + stop_after)
    chunk = max(1, (end - cp.cursor) // (workers * 16)) if workers > 1 else max(1, min(64, n // 32))
    jobs = [(kind, w_bound, leg_bound, engine, lo, min(lo + chunk, end)) for lo in range(cp.cursor, end, chunk)]

    started = time.perf_counter()
    last_save = started

    def merge(result: tuple[list[Hit], int], hi: int) -> None:
        nonlocal last_save, cp
        hits, candidates = result
        fresh = []
        for h in hits:
            if dedupe:
                key = _hit_key(h)
                if key in seen:
                    continue
                seen.add(key)
            fresh.append(h)
        # Rebinding cp in one step keeps it consistent if interrupted here.
        cp = Checkpoint(kind, w_bound, leg_bound, hi, cp.candidates + candidates, cp.hits + fresh)
        if on_hit is not None:
            for h in fresh:
                on_hit(h)
        if path is not None and time.perf_counter() - last_save >= checkpoint_interval:
            checkpoint_save(path, cp)
            last_save = time.perf_counter()

    try:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for job, result in zip(jobs, pool.map(_work, jobs)):
                    merge(result, job[-1])
        else:
            for job in jobs:
                merge(run_rows(space, job[-2], job[-1]), job[-1])
    except KeyboardInterrupt:
        if path is not None:
            checkpoint_save(path, cp)
            log.warning("interrupted; progress saved to %s at outer index %d", path, cp.cursor)
        raise

    if path is not None:
        checkpoint_save(path, cp)
    if cp.cursor < n:
        raise ScanInterrupted(cp.cursor, None if path is None else str(path))

    report = ScanReport(
        scan_kind=kind,
        w_bound=w_bound,
        leg_bound=leg_bound,
        triples=n,
        pairs_examined=space.pairs_examined,
        candidates=cp.candidates,
        hits=list(cp.hits),
        elapsed=time.perf_counter() - started,
    )
    for h in report.hits:
        verify_hit(kind, h)
    return report


def verify_hit(kind: ScanKind | str, hit: Hit) -> None:
    """Independently re-derive a hit; raise :class:`VerificationFailure` on any mismatch."""
    kind = as_kind(kind)
    t1, t2 = hit.t1, hit.t2
    if kind is ScanKind.CONJECTURE1:
        (x, y, _), (u, v, _) = t1, t2
        roots = (perfect_square((x * u) ** 2 + (y * v) ** 2), perfect_square((x * v) ** 2 + (y * u) ** 2))
        ok = roots == hit.roots
    elif kind is ScanKind.CONJECTURE2:
        ok = perfect_from_counterexample(t1, t2) == hit.cuboid
    elif kind.is_corollary:
        build = corollary1 if kind is ScanKind.COR1 else corollary2
        ok = build(t1, t2) == hit.brick
    elif kind.is_theorem:
        build = {ScanKind.TH1: theorem1, ScanKind.TH2: theorem2, ScanKind.TH3: theorem3}[kind]
        ok = build(hit.leg_pair, t1, t2) == hit.brick
    else:
        build = {ScanKind.PROBLEM1: theorem1, ScanKind.PROBLEM2: theorem2, ScanKind.PROBLEM3: theorem3}[kind]
        holds = problem_product(kind, hit.leg_pair, t1, t2)  # type: ignore[arg-type]
        ok = (
            (problem_square(kind, hit.leg_pair, t1, t2),) == hit.roots  # type: ignore[arg-type]
            and holds == hit.product_holds
            and (build(hit.leg_pair, t1, t2) if holds else None) == hit.brick
        )
    if ok and hit.brick is not None:
        ok = verify_brick(*hit.brick.edges).is_euler
    if not ok:
        raise VerificationFailure(f"{kind.value} hit {hit.to_record()} failed re-verification")


def scan_corollary(kind: str, w_bound: int, **kw) -> ScanReport:
    """Every ordered pair of triples against a corollary's square condition."""
    kind_ = as_kind(kind)
    if not kind_.is_corollary:
        raise InvalidParams(f"{kind!r} is not a corollary scan")
    return run_scan(kind_, w_bound, **kw)


def scan_theorem(kind: str, w_bound: int, leg_bound: int, **kw) -> ScanReport:
    """Leg pairs and ordered triple pairs, filtered by the product condition first."""
    kind_ = as_kind(kind)
    if not kind_.is_theorem:
        raise InvalidParams(f"{kind!r} is not a theorem scan")
    return run_scan(kind_, w_bound, leg_bound, **kw)


def scan_conjecture1(w_bound: int, **kw) -> ScanReport:
    """Unordered triple pairs solving ``(xu)^2+(yv)^2 = □`` and ``(xv)^2+(yu)^2 = □``."""
    return run_scan(ScanKind.CONJECTURE1, w_bound, **kw)


def scan_conjecture2(w_bound: int, **kw) -> ScanReport:
    """Unordered triple pairs solving ``(zu)^2+(yv)^2 = □`` and ``(zv)^2+(yu)^2 = □``.

    The system is not symmetric in the two triples nor in the legs of
    ``(x, y, z)``, so each pair is tried in every orientation. Each hit carries
    the perfect cuboid it produces.
    """
    return run_scan(ScanKind.CONJECTURE2, w_bound, **kw)


def scan_problem(kind: str, w_bound: int, leg_bound: int, **kw) -> ScanReport:
    """Tuples meeting a theorem's square condition, each with its product verdict.

    ``report.violations`` lists tuples where the square holds but the product
    condition fails.
    """
    kind_ = as_kind(kind)
    if not kind_.is_problem:
        raise InvalidParams(f"{kind!r} is not a problem scan")
    return run_scan(kind_, w_bound, leg_bound, **kw)
