"""Primitive Pythagorean triples in canonical (odd leg, even leg, hypotenuse) form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .arith import check_nat, checked_mul
from .errors import InvalidInput, InvalidParams, NotATriple, NotPrimitive

__all__ = [
    "PythTriple",
    "LegPair",
    "make_triple",
    "as_triple",
    "as_leg_pair",
    "euclid",
    "enumerate_primitive",
    "scale",
    "leg_pairs",
]


@dataclass(frozen=True, slots=True, order=True)
class PythTriple:
    """A primitive triple with ``u`` odd, ``v`` even and ``u*u + v*v == w*w``.

    Construction validates every invariant. Use :func:`make_triple` when the
    legs may arrive in either order.
    """

    u: int
    v: int
    w: int

    def __post_init__(self) -> None:
        u, v, w = self.u, self.v, self.w
        if u <= 0 or v <= 0 or w <= 0:
            raise NotATriple(f"({u}, {v}, {w}) has a non-positive entry")
        check_nat(u, v, w)
        if u * u + v * v != w * w:
            raise NotATriple(f"{u}^2 + {v}^2 != {w}^2")
        if math.gcd(u, v) != 1:
            raise NotPrimitive(f"({u}, {v}, {w}) is not primitive")
        if not u & 1:
            raise InvalidInput(f"({u}, {v}, {w}) is not in odd-leg-first order")

    def __iter__(self) -> Iterator[int]:
        return iter((self.u, self.v, self.w))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.u, self.v, self.w)

    def __str__(self) -> str:
        return f"({self.u},{self.v},{self.w})"


@dataclass(frozen=True, slots=True)
class LegPair:
    """Leg pair ``(u0, v0)`` with ``u0`` odd and coprime to ``v0``.

    ``t0 = u0**2 + v0**2`` need not be a square, and ``v0`` may have either
    parity.
    """

    u0: int
    v0: int

    def __post_init__(self) -> None:
        if self.u0 <= 0 or self.v0 <= 0:
            raise InvalidParams(f"leg pair ({self.u0}, {self.v0}) must be positive")
        check_nat(self.u0, self.v0)
        if not self.u0 & 1:
            raise InvalidParams(f"u0 = {self.u0} must be odd")
        if math.gcd(self.u0, self.v0) != 1:
            raise InvalidParams(f"leg pair ({self.u0}, {self.v0}) is not coprime")

    @property
    def t0(self) -> int:
        return self.u0 * self.u0 + self.v0 * self.v0

    def __iter__(self) -> Iterator[int]:
        return iter((self.u0, self.v0))

    def __str__(self) -> str:
        return f"({self.u0},{self.v0})"


def make_triple(p: int, q: int, r: int) -> PythTriple:
    """Validate ``(p, q, r)`` and return it with the odd leg first.

    >>> make_triple(4, 3, 5)
    PythTriple(u=3, v=4, w=5)
    """
    if p <= 0 or q <= 0 or r <= 0:
        raise NotATriple(f"({p}, {q}, {r}) has a non-positive entry")
    check_nat(p, q, r)
    if p * p + q * q != r * r:
        raise NotATriple(f"{p}^2 + {q}^2 != {r}^2")
    # Both legs odd is impossible for a triple; both even means gcd >= 2.
    if math.gcd(p, q) != 1:
        raise NotPrimitive(f"({p}, {q}, {r}) is not primitive")
    if p & 1:
        return PythTriple(p, q, r)
    return PythTriple(q, p, r)


def as_triple(t: PythTriple | Sequence[int]) -> PythTriple:
    if isinstance(t, PythTriple):
        return t
    if len(t) != 3:
        raise NotATriple(f"expected three integers, got {t!r}")
    return make_triple(*t)


def as_leg_pair(p: LegPair | Sequence[int]) -> LegPair:
    if isinstance(p, LegPair):
        return p
    if len(p) != 2:
        raise InvalidParams(f"expected two integers, got {p!r}")
    return LegPair(*p)


def euclid(m: int, n: int) -> PythTriple:
    """Triple ``(m^2 - n^2, 2mn, m^2 + n^2)`` for coprime ``m > n > 0`` of opposite parity."""
    if not m > n > 0:
        raise InvalidParams(f"need m > n > 0, got m={m}, n={n}")
    if math.gcd(m, n) != 1:
        raise InvalidParams(f"gcd({m}, {n}) != 1")
    if not (m + n) & 1:
        raise InvalidParams(f"m + n = {m + n} must be odd")
    return PythTriple(m * m - n * n, 2 * m * n, m * m + n * n)


@lru_cache(maxsize=16)
def _enumerate(w_max: int) -> tuple[PythTriple, ...]:
    out = []
    m = 2
    while m * m + 1 <= w_max:
        for n in range(1 + (m & 1), m, 2):
            if m * m + n * n > w_max:
                break
            if math.gcd(m, n) == 1:
                out.append(euclid(m, n))
        m += 1
    out.sort(key=lambda t: (t.w, t.u))
    return tuple(out)


def enumerate_primitive(w_max: int) -> list[PythTriple]:
    """All primitive triples with hypotenuse at most ``w_max``, sorted by ``(w, u)``."""
    if w_max < 5:
        raise InvalidParams(f"w_max must be at least 5, got {w_max}")
    check_nat(w_max)
    return list(_enumerate(w_max))


def scale(t: PythTriple, k: int) -> tuple[int, int, int]:
    if k < 1:
        raise InvalidParams(f"scale factor must be >= 1, got {k}")
    return (checked_mul(k, t.u), checked_mul(k, t.v), checked_mul(k, t.w))


def leg_pairs(leg_bound: int, *, odd_v0: bool = False) -> list[LegPair]:
    """Admissible leg pairs with both entries at most ``leg_bound``, ordered by ``(u0, v0)``."""
    step = 2 if odd_v0 else 1
    return [
        LegPair(u0, v0)
        for u0 in range(1, leg_bound + 1, 2)
        for v0 in range(1, leg_bound + 1, step)
        if math.gcd(u0, v0) == 1
    ]
