"""Euler brick verification, canonical form, derivation and decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .arith import check_nat, checked_mul, perfect_square, v2
from .errors import InvalidInput, NonCanonicalizable, NotEulerBrick
from .triples import PythTriple, make_triple

__all__ = [
    "Brick",
    "BrickReport",
    "Decomposition",
    "brick_from_edges",
    "verify_brick",
    "normalize",
    "derived_brick",
    "decompose",
    "space_diagonal",
]


@dataclass(frozen=True, slots=True)
class Brick:
    """Edges ``(a, b, c)`` and face diagonals ``d, e, f`` over ``ab, ac, bc``.

    The three Euler equations are checked exactly on construction, so a
    ``Brick`` instance is always a genuine Euler brick.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self) -> None:
        a, b, c, d, e, f = self.a, self.b, self.c, self.d, self.e, self.f
        if a <= 0 or b <= 0 or c <= 0:
            raise InvalidInput(f"edges ({a}, {b}, {c}) must be positive")
        check_nat(a, b, c, d, e, f, a * a + b * b, a * a + c * c, b * b + c * c)
        if a * a + b * b != d * d:
            raise NotEulerBrick(f"{a}^2 + {b}^2 != {d}^2")
        if a * a + c * c != e * e:
            raise NotEulerBrick(f"{a}^2 + {c}^2 != {e}^2")
        if b * b + c * c != f * f:
            raise NotEulerBrick(f"{b}^2 + {c}^2 != {f}^2")

    @property
    def edges(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def diagonals(self) -> tuple[int, int, int]:
        return (self.d, self.e, self.f)

    @property
    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    @property
    def space_diagonal(self) -> int | None:
        return space_diagonal(self.a, self.b, self.c)

    @property
    def is_perfect(self) -> bool:
        return self.space_diagonal is not None

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c, self.d, self.e, self.f))


@dataclass(frozen=True)
class BrickReport:
    edges: tuple[int, int, int]
    diagonals: tuple[int, int, int] | None
    is_euler: bool
    is_primitive: bool
    space_diagonal: int | None


@dataclass(frozen=True)
class Decomposition:
    """Edge gcds and the primitive triples beneath each face of a brick."""

    k1: int
    k2: int
    k3: int
    t1: PythTriple
    t2: PythTriple
    t3: PythTriple


def space_diagonal(a: int, b: int, c: int) -> int | None:
    s = a * a + b * b + c * c
    check_nat(s)
    return perfect_square(s)


def brick_from_edges(a: int, b: int, c: int) -> Brick:
    """Build a brick from its edges, computing the diagonals.

    Raises :class:`NotEulerBrick` if any face diagonal is irrational.
    """
    if a <= 0 or b <= 0 or c <= 0:
        raise InvalidInput(f"edges ({a}, {b}, {c}) must be positive")
    diags = []
    for x, y in ((a, b), (a, c), (b, c)):
        s = x * x + y * y
        check_nat(s)
        r = perfect_square(s)
        if r is None:
            raise NotEulerBrick(f"{x}^2 + {y}^2 = {s} is not a square")
        diags.append(r)
    return Brick(a, b, c, *diags)


def verify_brick(a: int, b: int, c: int) -> BrickReport:
    if a <= 0 or b <= 0 or c <= 0:
        raise InvalidInput(f"edges ({a}, {b}, {c}) must be positive")
    sums = (a * a + b * b, a * a + c * c, b * b + c * c)
    check_nat(*sums)
    roots = tuple(perfect_square(s) for s in sums)
    is_euler = None not in roots
    return BrickReport(
        edges=(a, b, c),
        diagonals=roots if is_euler else None,  # type: ignore[arg-type]
        is_euler=is_euler,
        is_primitive=is_euler and math.gcd(a, b, c) == 1,
        space_diagonal=space_diagonal(a, b, c),
    )


def normalize(br: Brick) -> Brick:
    """Primitive form with edges ordered by strictly increasing 2-adic valuation.

    Raises :class:`NonCanonicalizable` when two edges share a valuation.
    """
    g = math.gcd(br.a, br.b, br.c)
    edges = [x // g for x in br.edges]
    vals = [v2(x) for x in edges]
    if len(set(vals)) != 3:
        raise NonCanonicalizable(
            f"edges {tuple(edges)} have 2-adic valuations {tuple(vals)} with a tie"
        )
    order = sorted(range(3), key=vals.__getitem__)
    return brick_from_edges(*(edges[i] for i in order))


def derived_brick(br: Brick) -> Brick:
    """The brick with edges ``(bc, ac, ab)``.

    Its diagonals are ``(c*d, b*e, a*f)``; ``Brick`` re-checks them.
    """
    a, b, c, d, e, f = br
    return Brick(
        checked_mul(b, c),
        checked_mul(a, c),
        checked_mul(a, b),
        checked_mul(c, d),
        checked_mul(b, e),
        checked_mul(a, f),
    )


def decompose(br: Brick) -> Decomposition:
    a, b, c, d, e, f = br
    k1 = math.gcd(a, b)
    k2 = math.gcd(a, c)
    k3 = math.gcd(b, c)
    return Decomposition(
        k1=k1,
        k2=k2,
        k3=k3,
        t1=make_triple(a // k1, b // k1, d // k1),
        t2=make_triple(a // k2, c // k2, e // k2),
        t3=make_triple(b // k3, c // k3, f // k3),
    )
