"""Euler bricks from pairs of primitive Pythagorean triples.

Construction, verification, canonical form and decomposition of Euler bricks,
plus bounded exhaustive scans for the two-square systems whose solutions would
yield a perfect cuboid.
"""

from .arith import gcd, gcd3, isqrt, perfect_square, v2
from .bricks import (
    Brick,
    BrickReport,
    Decomposition,
    brick_from_edges,
    decompose,
    derived_brick,
    normalize,
    verify_brick,
)
from .constructors import (
    PerfectCuboid,
    corollary1,
    corollary2,
    lift_pair,
    perfect_from_counterexample,
    sounderson,
    theorem1,
    theorem2,
    theorem3,
)
from .triples import LegPair, PythTriple, enumerate_primitive, euclid, make_triple, scale

__version__ = "0.1.0"

__all__ = [
    "gcd",
    "gcd3",
    "isqrt",
    "perfect_square",
    "v2",
    "Brick",
    "BrickReport",
    "Decomposition",
    "brick_from_edges",
    "decompose",
    "derived_brick",
    "normalize",
    "verify_brick",
    "PerfectCuboid",
    "corollary1",
    "corollary2",
    "lift_pair",
    "perfect_from_counterexample",
    "sounderson",
    "theorem1",
    "theorem2",
    "theorem3",
    "LegPair",
    "PythTriple",
    "enumerate_primitive",
    "euclid",
    "make_triple",
    "scale",
]
