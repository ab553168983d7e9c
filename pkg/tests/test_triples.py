import pytest

from brickforge.errors import InvalidParams, NotATriple, NotPrimitive
from brickforge.triples import (
    LegPair,
    PythTriple,
    enumerate_primitive,
    euclid,
    leg_pairs,
    make_triple,
    scale,
)

from oracles import brute_leg_pairs, sorted_triples, trial_gcd


def test_make_triple_reorders_legs():
    assert make_triple(4, 3, 5) == PythTriple(3, 4, 5)
    assert make_triple(3, 4, 5).as_tuple() == (3, 4, 5)


@pytest.mark.parametrize(
    "args, err",
    [((6, 8, 10), NotPrimitive), ((3, 4, 6), NotATriple), ((0, 1, 1), NotATriple), ((1, 0, 1), NotATriple)],
)
def test_make_triple_rejects(args, err):
    with pytest.raises(err):
        make_triple(*args)


def test_direct_construction_checks_parity():
    with pytest.raises(ValueError):
        PythTriple(4, 3, 5)


@pytest.mark.parametrize("m, n, expected", [(2, 1, (3, 4, 5)), (6, 5, (11, 60, 61))])
def test_euclid(m, n, expected):
    assert euclid(m, n).as_tuple() == expected


@pytest.mark.parametrize("m, n", [(4, 2), (3, 1), (1, 2), (2, 0)])
def test_euclid_invalid(m, n):
    with pytest.raises(InvalidParams):
        euclid(m, n)


def test_enumerate_small():
    assert [t.as_tuple() for t in enumerate_primitive(5)] == [(3, 4, 5)]
    assert [t.as_tuple() for t in enumerate_primitive(25)] == [(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25)]
    assert len(enumerate_primitive(100)) == 16


@pytest.mark.parametrize("w_max", [5, 25, 100, 101, 997, 2000])
def test_enumerate_matches_brute_force(w_max):
    got = [t.as_tuple() for t in enumerate_primitive(w_max)]
    assert got == sorted_triples(w_max)
    assert len(set(got)) == len(got)


def test_enumerated_invariants_hold():
    for t in enumerate_primitive(2000):
        u, v, w = t
        assert u * u + v * v == w * w
        assert trial_gcd(u, v) == 1
        assert u % 2 == 1 and v % 2 == 0 and w % 2 == 1


def test_enumerate_rejects_small_bound():
    with pytest.raises(InvalidParams):
        enumerate_primitive(4)


def test_euclid_injective_on_admissible_params():
    params = [(m, n) for m in range(2, 301) for n in range(1, m) if (m + n) % 2 and trial_gcd(m, n) == 1]
    outputs = [euclid(m, n) for m, n in params]
    assert len(set(outputs)) == len(params)


def test_scale():
    assert scale(PythTriple(3, 4, 5), 1) == (3, 4, 5)
    assert scale(PythTriple(39, 80, 89), 3) == (117, 240, 267)
    assert scale(PythTriple(11, 60, 61), 4) == (44, 240, 244)
    with pytest.raises(InvalidParams):
        scale(PythTriple(3, 4, 5), 0)


def test_leg_pair():
    p = LegPair(7, 20)
    assert p.t0 == 449
    assert LegPair(3, 5).t0 == 34
    for bad in [(2, 3), (3, 6), (0, 1)]:
        with pytest.raises(InvalidParams):
            LegPair(*bad)


@pytest.mark.parametrize("bound, odd", [(1, False), (4, False), (20, False), (5, True), (50, True)])
def test_leg_pairs_match_oracle(bound, odd):
    assert [tuple(p) for p in leg_pairs(bound, odd_v0=odd)] == brute_leg_pairs(bound, odd)
