"""Brick parametrizations built from pairs of primitive triples.

Each constructor returns ``None`` when its square or product hypothesis fails,
since scans probe them very many times. Type-level problems (non-primitive
triples, an even ``v0`` for :func:`theorem2`) raise. Outputs are in the
formula's own edge order; call :func:`brickforge.bricks.normalize` for the
canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import check_nat, perfect_square
from .bricks import Brick
from .errors import (
    DegenerateEdge,
    HypothesisNotMet,
    InvalidInput,
    InvalidParams,
    NotATriple,
    VerificationFailure,
)
from .triples import LegPair, PythTriple, as_leg_pair, as_triple

__all__ = [
    "PerfectCuboid",
    "theorem1",
    "corollary1",
    "theorem2",
    "corollary2",
    "theorem3",
    "lift_pair",
    "sounderson",
    "perfect_from_counterexample",
    "CONSTRUCTORS",
]

TripleLike = PythTriple | Sequence[int]
LegPairLike = LegPair | Sequence[int]


def _sqrt_sum(x: int, y: int) -> int | None:
    s = x * x + y * y
    check_nat(s)
    return perfect_square(s)


def theorem1(p: LegPairLike, t1: TripleLike, t2: TripleLike) -> Brick | None:
    """Edges ``(u0*u2, v0*u1, v0*v1)``; needs ``v0*u1 == u0*v2`` and a square ``e``."""
    u0, v0 = as_leg_pair(p)
    u1, v1, w1 = as_triple(t1)
    u2, v2, w2 = as_triple(t2)
    if v0 * u1 != u0 * v2:
        return None
    a, b, c = u0 * u2, v0 * u1, v0 * v1
    e = _sqrt_sum(a, c)
    if e is None:
        return None
    return Brick(a, b, c, u0 * w2, e, v0 * w1)


def corollary1(t1: TripleLike, t2: TripleLike) -> Brick | None:
    """Edges ``(u1*u2, u1*v2, v1*v2)``; needs ``(u1*u2)^2 + (v1*v2)^2`` square."""
    u1, v1, w1 = as_triple(t1)
    u2, v2, w2 = as_triple(t2)
    a, b, c = u1 * u2, u1 * v2, v1 * v2
    e = _sqrt_sum(a, c)
    if e is None:
        return None
    return Brick(a, b, c, u1 * w2, e, v2 * w1)


def theorem2(p: LegPairLike, t1: TripleLike, t2: TripleLike) -> Brick | None:
    """Edges ``(u0*u2, v0*v1, u0*v2)`` for odd ``u0, v0`` with ``u0*u2 == v0*u1``."""
    u0, v0 = as_leg_pair(p)
    if not v0 & 1:
        raise InvalidParams(f"theorem2 needs odd v0, got {v0}")
    u1, v1, w1 = as_triple(t1)
    u2, v2, w2 = as_triple(t2)
    if u0 * u2 != v0 * u1:
        return None
    a, b, c = u0 * u2, v0 * v1, u0 * v2
    f = _sqrt_sum(b, c)
    if f is None:
        return None
    return Brick(a, b, c, v0 * w1, u0 * w2, f)


def corollary2(t1: TripleLike, t2: TripleLike) -> Brick | None:
    """Edges ``(u1*u2, v1*u2, u1*v2)``; needs ``(v1*u2)^2 + (u1*v2)^2`` square."""
    u1, v1, w1 = as_triple(t1)
    u2, v2, w2 = as_triple(t2)
    a, b, c = u1 * u2, v1 * u2, u1 * v2
    f = _sqrt_sum(b, c)
    if f is None:
        return None
    return Brick(a, b, c, u2 * w1, u1 * w2, f)


def theorem3(p: LegPairLike, t1: TripleLike, t2: TripleLike) -> Brick | None:
    """Edges ``(u0*u2, v0*u1, v0*v1)``; needs ``v0*v1 == u0*v2`` and a square ``d``."""
    u0, v0 = as_leg_pair(p)
    u1, v1, w1 = as_triple(t1)
    u2, v2, w2 = as_triple(t2)
    if v0 * v1 != u0 * v2:
        return None
    a, b, c = u0 * u2, v0 * u1, v0 * v1
    d = _sqrt_sum(a, b)
    if d is None:
        return None
    return Brick(a, b, c, d, u0 * w2, v0 * w1)


def lift_pair(t0: TripleLike) -> tuple[PythTriple, PythTriple]:
    """The two triples that feed :func:`theorem3` to give the Sounderson brick.

    With ``t0 = (u0, v0, w0)`` these are Euclid's formula at ``(2*u0, w0)``
    and ``(2*v0, w0)``, up to the order of the parameters.
    """
    u0, v0, w0 = as_triple(t0)
    ww = w0 * w0
    t1 = PythTriple(abs(4 * u0 * u0 - ww), 4 * u0 * w0, 4 * u0 * u0 + ww)
    t2 = PythTriple(abs(4 * v0 * v0 - ww), 4 * v0 * w0, 4 * v0 * v0 + ww)
    if v0 * t1.v != u0 * t2.v:
        raise VerificationFailure(f"lifted pair of {t0} breaks v0*v1 == u0*v2")
    return t1, t2


def sounderson(t0: TripleLike) -> Brick:
    """The classical brick with ``d == w0**3``, built from one primitive triple."""
    u0, v0, w0 = as_triple(t0)
    ww = w0 * w0
    a = abs(u0 * (4 * v0 * v0 - ww))
    b = abs(v0 * (4 * u0 * u0 - ww))
    c = 4 * u0 * v0 * w0
    return Brick(a, b, c, w0 * ww, u0 * (4 * v0 * v0 + ww), v0 * (4 * u0 * u0 + ww))


@dataclass(frozen=True, slots=True)
class PerfectCuboid:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int

    def __post_init__(self) -> None:
        # Raises NotEulerBrick on any broken face equation.
        Brick(self.a, self.b, self.c, self.d, self.e, self.f)
        a, b, c, g = self.a, self.b, self.c, self.g
        check_nat(a * a + b * b + c * c)
        if a * a + b * b + c * c != g * g:
            raise InvalidInput(f"space diagonal {g} does not close ({a}, {b}, {c})")

    @property
    def edges(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def diagonals(self) -> tuple[int, int, int]:
        return (self.d, self.e, self.f)


def _pythagorean(t: Sequence[int], name: str) -> tuple[int, int, int]:
    if len(t) != 3 or min(t) < 0:
        raise NotATriple(f"{name} = {tuple(t)!r} is not a non-negative triple")
    p, q, r = t
    if p * p + q * q != r * r:
        raise NotATriple(f"{name} = {tuple(t)!r} is not Pythagorean")
    return p, q, r


def perfect_from_counterexample(txyz: Sequence[int], tuvw: Sequence[int]) -> PerfectCuboid:
    """Turn a solution of the two-square system into a perfect cuboid.

    With ``(x, y, z) = txyz`` and ``(u, v, w) = tuvw``, if both
    ``(z*u)^2 + (y*v)^2`` and ``(z*v)^2 + (y*u)^2`` are squares then the cuboid
    with edges ``(x*u, x*v, y*w)`` has integer face diagonals and space
    diagonal ``w*z``. Leg order is taken as given, so ``y`` may be either leg.
    Degenerate triples such as ``(1, 0, 1)`` are accepted as input and
    rejected with :class:`DegenerateEdge`.
    """
    x, y, z = _pythagorean(txyz, "txyz")
    u, v, w = _pythagorean(tuvw, "tuvw")
    a, b, c = x * u, x * v, y * w
    if 0 in (a, b, c):
        raise DegenerateEdge(f"edges ({a}, {b}, {c}) include a zero")
    e = _sqrt_sum(z * u, y * v)
    f = _sqrt_sum(z * v, y * u)
    if e is None or f is None:
        raise HypothesisNotMet(
            f"(zu)^2+(yv)^2 and (zv)^2+(yu)^2 are not both squares for {tuple(txyz)}, {tuple(tuvw)}"
        )
    try:
        return PerfectCuboid(a, b, c, x * w, e, f, w * z)
    except (ValueError, ArithmeticError) as exc:
        raise VerificationFailure(f"cuboid from {tuple(txyz)}, {tuple(tuvw)} failed re-check") from exc


CONSTRUCTORS = {
    "th1": theorem1,
    "th2": theorem2,
    "th3": theorem3,
    "cor1": corollary1,
    "cor2": corollary2,
    "sounderson": sounderson,
}
