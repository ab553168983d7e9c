"""Per-row scan kernels.

A row is one outer index ``i`` into the canonical triple enumeration. Each
kernel returns the raw hits for its rows (in deterministic inner order) plus
the number of square-condition candidates it evaluated.

Two engines exist. ``numpy`` evaluates a whole row at once in int64 and is
used while every intermediate sum stays below ``2**62``; ``python`` works on
exact integers up to the 127-bit envelope. Both confirm each hit through the
exact constructors before returning it, so they produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..arith import NAT_MAX, perfect_square
from ..constructors import (
    corollary1,
    corollary2,
    perfect_from_counterexample,
    theorem1,
    theorem2,
    theorem3,
)
from ..errors import BrickforgeError, VerificationFailure
from ..triples import LegPair, PythTriple, enumerate_primitive, leg_pairs
from .report import Hit, ScanKind

INT64_SAFE = 1 << 62


def max_intermediate(kind: ScanKind, w_bound: int, leg_bound: int | None) -> int:
    """Upper bound on any sum of squares formed by the scan.

    Two-triple sums are bounded by ``w1^2 * w2^2`` (Cauchy-Schwarz); sums
    involving a leg pair by ``2 * L^2 * w^2``.
    """
    if kind.needs_leg_bound:
        return 2 * leg_bound * leg_bound * w_bound * w_bound  # type: ignore[operator]
    return w_bound**4


@dataclass
class ScanSpace:
    kind: ScanKind
    w_bound: int
    leg_bound: int | None
    engine: str
    triples: tuple[PythTriple, ...] = ()
    legs: tuple[LegPair, ...] = ()
    U: list[int] = field(default_factory=list)
    V: list[int] = field(default_factory=list)
    by_odd: dict[int, list[int]] = field(default_factory=dict)
    by_even: dict[int, list[int]] = field(default_factory=dict)
    legs_by_u0: dict[int, list[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.triples = tuple(enumerate_primitive(self.w_bound))
        self.U = [t.u for t in self.triples]
        self.V = [t.v for t in self.triples]
        self.Ua = np.array(self.U, dtype=np.int64) if self.engine == "numpy" else None
        self.Va = np.array(self.V, dtype=np.int64) if self.engine == "numpy" else None
        self.Wa = np.array([t.w for t in self.triples], dtype=np.int64) if self.engine == "numpy" else None
        for j, t in enumerate(self.triples):
            self.by_odd.setdefault(t.u, []).append(j)
            self.by_even.setdefault(t.v, []).append(j)
        if self.kind.needs_leg_bound:
            odd = self.kind in (ScanKind.TH2, ScanKind.PROBLEM2)
            self.legs = tuple(leg_pairs(self.leg_bound, odd_v0=odd))  # type: ignore[arg-type]
            for p in self.legs:
                self.legs_by_u0.setdefault(p.u0, []).append(p.v0)
            if self.engine == "numpy":
                self.U0 = np.array([p.u0 for p in self.legs], dtype=np.int64)
                self.V0 = np.array([p.v0 for p in self.legs], dtype=np.int64)

    @property
    def n(self) -> int:
        return len(self.triples)

    @property
    def pairs_examined(self) -> int:
        n = self.n
        if self.kind.is_conjecture:
            return n * (n + 1) // 2
        if self.kind.is_corollary:
            return n * n
        return len(self.legs) * n * n


def choose_engine(kind: ScanKind, w_bound: int, leg_bound: int | None, engine: str = "auto") -> str:
    if engine not in ("auto", "numpy", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    fits = max_intermediate(kind, w_bound, leg_bound) < INT64_SAFE
    if engine == "numpy" and not fits:
        raise ValueError("bounds exceed the int64 envelope of the numpy engine")
    if engine == "auto":
        return "numpy" if fits else "python"
    return engine


@lru_cache(maxsize=8)
def get_space(kind: ScanKind, w_bound: int, leg_bound: int | None, engine: str) -> ScanSpace:
    return ScanSpace(kind, w_bound, leg_bound, engine)


def _np_square(s: np.ndarray) -> np.ndarray:
    # Exact for 0 <= s < 2**62: the float root is within 2**-22 of an integer root.
    r = np.rint(np.sqrt(s.astype(np.float64))).astype(np.int64)
    return r * r == s


def _confirm(value: object, what: str) -> object:
    if value is None:
        raise VerificationFailure(f"kernel flagged {what} but the exact re-check rejected it")
    return value


def run_rows(space: ScanSpace, lo: int, hi: int) -> tuple[list[Hit], int]:
    kind = space.kind
    hits: list[Hit] = []
    candidates = 0
    for i in range(lo, hi):
        if kind is ScanKind.CONJECTURE1:
            c = _conj1_row(space, i, hits)
        elif kind is ScanKind.CONJECTURE2:
            c = _conj2_row(space, i, hits)
        elif kind.is_corollary:
            c = _cor_row(space, i, hits)
        elif kind.is_theorem:
            c = _theorem_row(space, i, hits)
        else:
            c = _problem_row(space, i, hits)
        candidates += c
    return hits, candidates


# --- two-triple systems ---------------------------------------------------


def _conj1_row(sp: ScanSpace, i: int, hits: list[Hit]) -> int:
    x, y = sp.U[i], sp.V[i]
    if sp.engine == "numpy":
        u, v = sp.Ua[i:], sp.Va[i:]
        mask = _np_square((x * u) ** 2 + (y * v) ** 2) & _np_square((x * v) ** 2 + (y * u) ** 2)
        js = (i + k for k in np.flatnonzero(mask).tolist())
    else:
        js = (
            j
            for j in range(i, sp.n)
            if perfect_square((x * sp.U[j]) ** 2 + (y * sp.V[j]) ** 2) is not None
            and perfect_square((x * sp.V[j]) ** 2 + (y * sp.U[j]) ** 2) is not None
        )
    for j in js:
        u, v = sp.U[j], sp.V[j]
        r1 = _confirm(perfect_square((x * u) ** 2 + (y * v) ** 2), "conjecture1 pair")
        r2 = _confirm(perfect_square((x * v) ** 2 + (y * u) ** 2), "conjecture1 pair")
        hits.append(
            Hit(i, sp.triples[i].as_tuple(), sp.triples[j].as_tuple(), roots=(r1, r2))  # type: ignore[arg-type]
        )
    return sp.n - i


def _conj2_variants(sp: ScanSpace, i: int, j: int):
    """The oriented (xyz, uvw) assignments tested for the pair ``i <= j``."""
    ti, tj = sp.triples[i], sp.triples[j]
    out = [((ti.u, ti.v, ti.w), tj), ((ti.v, ti.u, ti.w), tj)]
    if j != i:
        out += [((tj.u, tj.v, tj.w), ti), ((tj.v, tj.u, tj.w), ti)]
    return out


def _conj2_solved(xyz: tuple[int, int, int], uvw: PythTriple) -> bool:
    _, y, z = xyz
    u, v, _ = uvw
    return (
        perfect_square((z * u) ** 2 + (y * v) ** 2) is not None
        and perfect_square((z * v) ** 2 + (y * u) ** 2) is not None
    )


def _conj2_row(sp: ScanSpace, i: int, hits: list[Hit]) -> int:
    ti = sp.triples[i]
    if sp.engine == "numpy":
        x, y, z = ti.u, ti.v, ti.w
        u, v = sp.Ua[i:], sp.Va[i:]
        W = sp.Wa[i:]
        # Any of the four orientations solving the system flags the pair.
        mask = (
            (_np_square((z * u) ** 2 + (y * v) ** 2) & _np_square((z * v) ** 2 + (y * u) ** 2))
            | (_np_square((z * u) ** 2 + (x * v) ** 2) & _np_square((z * v) ** 2 + (x * u) ** 2))
            | (_np_square((W * x) ** 2 + (v * y) ** 2) & _np_square((W * y) ** 2 + (v * x) ** 2))
            | (_np_square((W * x) ** 2 + (u * y) ** 2) & _np_square((W * y) ** 2 + (u * x) ** 2))
        )
        js = [i + k for k in np.flatnonzero(mask).tolist()]
    else:
        js = range(i, sp.n)
    for j in js:
        for xyz, uvw in _conj2_variants(sp, i, j):
            if not _conj2_solved(xyz, uvw):
                continue
            try:
                cuboid = perfect_from_counterexample(xyz, uvw.as_tuple())
            except BrickforgeError as exc:
                raise VerificationFailure(
                    f"pair {xyz}, {uvw} solves the system but gives no verified cuboid"
                ) from exc
            hits.append(Hit(i, xyz, uvw.as_tuple(), cuboid=cuboid))
    n_rest = sp.n - i
    return 2 + 4 * (n_rest - 1)


def _cor_row(sp: ScanSpace, i: int, hits: list[Hit]) -> int:
    t1 = sp.triples[i]
    u1, v1 = t1.u, t1.v
    first = sp.kind is ScanKind.COR1
    if sp.engine == "numpy":
        u, v = sp.Ua, sp.Va
        s = (u1 * u) ** 2 + (v1 * v) ** 2 if first else (v1 * u) ** 2 + (u1 * v) ** 2
        js = np.flatnonzero(_np_square(s)).tolist()
    else:
        if first:
            js = [j for j in range(sp.n) if perfect_square((u1 * sp.U[j]) ** 2 + (v1 * sp.V[j]) ** 2) is not None]
        else:
            js = [j for j in range(sp.n) if perfect_square((v1 * sp.U[j]) ** 2 + (u1 * sp.V[j]) ** 2) is not None]
    build = corollary1 if first else corollary2
    for j in js:
        t2 = sp.triples[j]
        brick = _confirm(build(t1, t2), f"{sp.kind.value} pair {t1}, {t2}")
        hits.append(Hit(i, t1.as_tuple(), t2.as_tuple(), brick=brick))  # type: ignore[arg-type]
    return sp.n


# --- leg-pair systems -----------------------------------------------------


def _theorem_row(sp: ScanSpace, i: int, hits: list[Hit]) -> int:
    """Product condition first: it pins the second triple's leg exactly."""
    t1 = sp.triples[i]
    u1, v1 = t1.u, t1.v
    kind = sp.kind
    # u0 must divide the leg of t1 that appears in the product condition.
    pivot = v1 if kind is ScanKind.TH3 else u1
    index = sp.by_odd if kind is ScanKind.TH2 else sp.by_even
    build = {ScanKind.TH1: theorem1, ScanKind.TH2: theorem2, ScanKind.TH3: theorem3}[kind]
    candidates = 0
    for u0, v0s in sp.legs_by_u0.items():
        if pivot % u0:
            continue
        q = pivot // u0
        for v0 in v0s:
            for j in index.get(v0 * q, ()):
                candidates += 1
                t2 = sp.triples[j]
                u2, v2 = t2.u, t2.v
                if kind is ScanKind.TH1:
                    ok = perfect_square((u0 * u2) ** 2 + (v0 * v1) ** 2) is not None
                elif kind is ScanKind.TH2:
                    ok = perfect_square((v0 * v1) ** 2 + (u0 * v2) ** 2) is not None
                else:
                    ok = perfect_square((u0 * u2) ** 2 + (v0 * u1) ** 2) is not None
                if ok:
                    brick = _confirm(build(LegPair(u0, v0), t1, t2), f"{kind.value} tuple")
                    hits.append(
                        Hit(i, t1.as_tuple(), t2.as_tuple(), leg_pair=(u0, v0), brick=brick)  # type: ignore[arg-type]
                    )
    return candidates


_PROBLEM_THEOREM = {
    ScanKind.PROBLEM1: (ScanKind.TH1, theorem1),
    ScanKind.PROBLEM2: (ScanKind.TH2, theorem2),
    ScanKind.PROBLEM3: (ScanKind.TH3, theorem3),
}


def problem_square(kind: ScanKind, p: tuple[int, int], t1, t2) -> int | None:
    u0, v0 = p
    u1, v1, _ = t1
    u2, v2, _ = t2
    if kind is ScanKind.PROBLEM1:
        return perfect_square((u0 * u2) ** 2 + (v0 * v1) ** 2)
    if kind is ScanKind.PROBLEM2:
        return perfect_square((v0 * v1) ** 2 + (u0 * v2) ** 2)
    return perfect_square((u0 * u2) ** 2 + (v0 * u1) ** 2)


def problem_product(kind: ScanKind, p: tuple[int, int], t1, t2) -> bool:
    u0, v0 = p
    u1, v1, _ = t1
    u2, v2, _ = t2
    if kind is ScanKind.PROBLEM1:
        return v0 * u1 == u0 * v2
    if kind is ScanKind.PROBLEM2:
        return u0 * u2 == v0 * u1
    return v0 * v1 == u0 * v2


def _problem_row(sp: ScanSpace, i: int, hits: list[Hit]) -> int:
    """Square condition first over every (leg pair, t2); then the product verdict."""
    t1 = sp.triples[i]
    u1, v1 = t1.u, t1.v
    kind = sp.kind
    if sp.engine == "numpy":
        U0, V0 = sp.U0[:, None], sp.V0[:, None]
        U2, V2 = sp.Ua[None, :], sp.Va[None, :]
        if kind is ScanKind.PROBLEM1:
            s = (U0 * U2) ** 2 + (V0 * v1) ** 2
        elif kind is ScanKind.PROBLEM2:
            s = (V0 * v1) ** 2 + (U0 * V2) ** 2
        else:
            s = (U0 * U2) ** 2 + (V0 * u1) ** 2
        found = np.argwhere(_np_square(s)).tolist()
    else:
        found = [
            (k, j)
            for k, p in enumerate(sp.legs)
            for j in range(sp.n)
            if problem_square(kind, (p.u0, p.v0), t1, sp.triples[j]) is not None
        ]
    _, build = _PROBLEM_THEOREM[kind]
    for k, j in found:
        p, t2 = sp.legs[k], sp.triples[j]
        pair = (p.u0, p.v0)
        root = _confirm(problem_square(kind, pair, t1, t2), f"{kind.value} tuple")
        holds = problem_product(kind, pair, t1, t2)
        brick = _confirm(build(p, t1, t2), f"{kind.value} tuple") if holds else None
        hits.append(
            Hit(
                i,
                t1.as_tuple(),
                t2.as_tuple(),
                leg_pair=pair,
                brick=brick,  # type: ignore[arg-type]
                roots=(root,),  # type: ignore[arg-type]
                product_holds=holds,
            )
        )
    return len(sp.legs) * sp.n


def check_envelope(kind: ScanKind, w_bound: int, leg_bound: int | None) -> bool:
    return max_intermediate(kind, w_bound, leg_bound) <= NAT_MAX
