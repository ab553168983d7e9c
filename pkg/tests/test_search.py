import math

import pytest

import brickforge.search.kernels as kernels
from brickforge.bricks import verify_brick
from brickforge.errors import InvalidParams, UnsafeBound, VerificationFailure
from brickforge.search import (
    ScanKind,
    ScanReport,
    max_safe_w_bound,
    run_scan,
    scan_conjecture1,
    scan_conjecture2,
    scan_corollary,
    scan_problem,
    scan_theorem,
)

from oracles import brute_leg_pairs, sorted_triples, square_root_or_none


def sq(n):
    return square_root_or_none(n) is not None


# --- brute-force oracles --------------------------------------------------


def oracle_corollary(kind, w):
    ts = sorted_triples(w)
    out = []
    for t1 in ts:
        for t2 in ts:
            (u1, v1, _), (u2, v2, _) = t1, t2
            s = (u1 * u2) ** 2 + (v1 * v2) ** 2 if kind == "cor1" else (v1 * u2) ** 2 + (u1 * v2) ** 2
            if sq(s):
                out.append((t1, t2))
    return out


def oracle_theorem(kind, w, legs):
    """Square condition and product condition, both tested on every tuple."""
    ts = sorted_triples(w)
    out = []
    for t1 in ts:
        for p in brute_leg_pairs(legs, odd_v0=kind == "th2"):
            for t2 in ts:
                (u0, v0), (u1, v1, _), (u2, v2, _) = p, t1, t2
                if kind == "th1":
                    ok = v0 * u1 == u0 * v2 and sq((u0 * u2) ** 2 + (v0 * v1) ** 2)
                elif kind == "th2":
                    ok = u0 * u2 == v0 * u1 and sq((v0 * v1) ** 2 + (u0 * v2) ** 2)
                else:
                    ok = v0 * v1 == u0 * v2 and sq((u0 * u2) ** 2 + (v0 * u1) ** 2)
                if ok:
                    out.append((p, t1, t2))
    return out


def oracle_conjecture1(w):
    ts = sorted_triples(w)
    return [
        (ts[i], ts[j])
        for i in range(len(ts))
        for j in range(i, len(ts))
        if sq((ts[i][0] * ts[j][0]) ** 2 + (ts[i][1] * ts[j][1]) ** 2)
        and sq((ts[i][0] * ts[j][1]) ** 2 + (ts[i][1] * ts[j][0]) ** 2)
    ]


def hits_of(report):
    if report.scan_kind.needs_leg_bound:
        return [(h.leg_pair, h.t1, h.t2) for h in report.hits]
    return [(h.t1, h.t2) for h in report.hits]


# --- corollary scans ------------------------------------------------------


def test_cor1_finds_published_row():
    rep = scan_corollary("cor1", 101)
    found = {(h.t1, h.t2): h.brick.edges for h in rep.hits}
    assert found[((7, 24, 25), (99, 20, 101))] == (693, 140, 480)


def test_cor2_finds_published_row():
    rep = scan_corollary("cor2", 145)
    found = {(h.t1, h.t2): h.brick.edges for h in rep.hits}
    assert found[((11, 60, 61), (17, 144, 145))] == (187, 1020, 1584)


def test_cor1_small_bound_has_no_hits():
    assert oracle_corollary("cor1", 25) == []
    rep = scan_corollary("cor1", 25)
    assert rep.hits == [] and rep.pairs_examined == 16


@pytest.mark.parametrize("kind, w", [("cor1", 400), ("cor2", 400), ("cor1", 1200), ("cor2", 1200)])
def test_corollary_scan_matches_oracle(kind, w):
    rep = scan_corollary(kind, w, dedupe=False)
    assert hits_of(rep) == oracle_corollary(kind, w)
    n = len(sorted_triples(w))
    assert rep.pairs_examined == n * n


# --- theorem scans --------------------------------------------------------


def test_th3_finds_halcke():
    rep = scan_theorem("th3", 89, 4)
    assert ((3, 4), (11, 60, 61), (39, 80, 89)) in hits_of(rep)
    assert rep.hits[0].brick.edges == (117, 44, 240)


def test_th1_finds_published_row():
    rep = scan_theorem("th1", 101, 20)
    assert ((7, 20), (7, 24, 25), (99, 20, 101)) in hits_of(rep)


def test_th2_small_bound_has_no_hits():
    assert oracle_theorem("th2", 29, 3) == []
    assert scan_theorem("th2", 29, 3).hits == []


@pytest.mark.parametrize("kind, w, legs", [("th1", 300, 25), ("th2", 300, 25), ("th3", 300, 25), ("th3", 89, 4)])
def test_theorem_scan_matches_oracle(kind, w, legs):
    rep = scan_theorem(kind, w, legs, dedupe=False)
    assert hits_of(rep) == oracle_theorem(kind, w, legs)
    n = len(sorted_triples(w))
    assert rep.pairs_examined == len(brute_leg_pairs(legs, kind == "th2")) * n * n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_product_first_equals_square_first(n):
    th = scan_theorem(f"th{n}", 500, 40, dedupe=False)
    pr = scan_problem(f"problem{n}", 500, 40)
    assert hits_of(th) == [(h.leg_pair, h.t1, h.t2) for h in pr.hits if h.product_holds]
    assert [h.brick for h in th.hits] == [h.brick for h in pr.hits if h.product_holds]


# --- problem scans --------------------------------------------------------


def test_problem3_halcke_tuple_satisfies_both_conditions():
    rep = scan_problem("p3", 89, 4)
    by_tuple = {(h.leg_pair, h.t1, h.t2): h for h in rep.hits}
    h = by_tuple[((3, 4), (11, 60, 61), (39, 80, 89))]
    assert h.product_holds is True and h.brick.edges == (117, 44, 240)
    assert h not in rep.violations


def test_problem2_pair_count_closed_form():
    rep = scan_problem("p2", 29, 5)
    # Odd coprime leg pairs up to 5: (1,1) (1,3) (1,5) (3,1) (3,5) (5,1) (5,3).
    assert rep.pairs_examined == 7 * 5 * 5 == 175
    assert rep.candidates == 175


def test_problem1_reports_verdicts():
    rep = scan_problem("p1", 101, 20)
    assert rep.hits
    for h in rep.hits:
        (u0, v0), (u1, v1, _), (u2, v2, _) = h.leg_pair, h.t1, h.t2
        assert h.roots[0] ** 2 == (u0 * u2) ** 2 + (v0 * v1) ** 2
        assert h.product_holds == (v0 * u1 == u0 * v2)
    assert any(h.product_holds for h in rep.hits)
    assert rep.violations


# --- conjecture scans -----------------------------------------------------


def test_conjecture1_at_100():
    rep = scan_conjecture1(100)
    assert rep.triples == 16 and rep.hits == []
    assert rep.pairs_examined == 16 * 17 // 2


@pytest.mark.parametrize("w", [100, 400, 1000])
def test_conjecture1_matches_oracle(w):
    assert hits_of(scan_conjecture1(w)) == oracle_conjecture1(w)


def test_conjecture1_example_pairs_are_not_hits():
    # (7,24,25),(99,20,101): first sum 843^2, second 5664976 is not a square.
    assert (693**2 + 480**2) == 843**2
    assert not sq(140**2 + 2376**2) and 140**2 + 2376**2 == 5664976
    # (20,21,29),(48,55,73): first sum 2255625 is not a square.
    assert (20 * 48) ** 2 + (21 * 55) ** 2 == 2255625 and not sq(2255625)


def test_conjecture2_bounds():
    rep = scan_conjecture2(5)
    assert rep.pairs_examined == 1 and rep.hits == []
    rep = scan_conjecture2(100)
    assert rep.hits == [] and rep.pairs_examined == 136


def test_conjecture2_engines_agree():
    a = scan_conjecture2(700, engine="numpy")
    b = scan_conjecture2(700, engine="python")
    assert a.same_result(b)


def test_conjecture2_hit_without_cuboid_aborts(monkeypatch):
    # Pretend one pair solves the system; the exact cuboid builder must refuse.
    real = kernels._conj2_solved
    monkeypatch.setattr(kernels, "_conj2_solved", lambda xyz, uvw: xyz == (5, 12, 13) or real(xyz, uvw))
    kernels.get_space.cache_clear()
    with pytest.raises(VerificationFailure):
        scan_conjecture2(30, engine="python")
    kernels.get_space.cache_clear()


# --- engine, worker and dedup invariants ---------------------------------


@pytest.mark.parametrize("kind, w, legs", [("cor1", 800, None), ("cor2", 800, None), ("conjecture1", 800, None),
                                           ("problem1", 150, 12), ("problem3", 150, 12)])
def test_engines_agree(kind, w, legs):
    a = run_scan(kind, w, legs, engine="numpy")
    b = run_scan(kind, w, legs, engine="python")
    assert a.same_result(b)


@pytest.mark.parametrize("kind, w, legs", [("cor2", 1500, None), ("conjecture2", 600, None), ("th3", 800, 30)])
def test_worker_count_does_not_change_report(kind, w, legs):
    one = run_scan(kind, w, legs, workers=1)
    many = run_scan(kind, w, legs, workers=3)
    assert one.same_result(many)


@pytest.mark.parametrize("kind", ["cor1", "cor2"])
def test_dedup_by_normalized_edges(kind):
    rep = scan_corollary(kind, 1500)
    keys = []
    for h in rep.hits:
        g = math.gcd(*h.brick.edges)
        keys.append(tuple(sorted(x // g for x in h.brick.edges)))
    assert len(keys) == len(set(keys))
    full = scan_corollary(kind, 1500, dedupe=False)
    full_keys = {tuple(sorted(x // math.gcd(*h.brick.edges) for x in h.brick.edges)) for h in full.hits}
    assert set(keys) == full_keys


def test_every_reported_brick_verifies():
    for kind, legs in [("cor1", None), ("cor2", None), ("th1", 30), ("th2", 30), ("th3", 30)]:
        for h in run_scan(kind, 1000, legs).hits:
            rep = verify_brick(*h.brick.edges)
            assert rep.is_euler
            assert rep.is_primitive == (math.gcd(*h.brick.edges) == 1)


def test_unsafe_bound_refused():
    with pytest.raises(UnsafeBound) as info:
        scan_conjecture1(2**40)
    assert info.value.max_safe == max_safe_w_bound("conjecture1")
    w = info.value.max_safe
    assert w**4 < 2**127 <= (w + 1) ** 4


def test_max_safe_bound_with_legs():
    w = max_safe_w_bound("th1", 1000)
    assert 2 * 1000**2 * w**2 < 2**127 <= 2 * 1000**2 * (w + 1) ** 2


def test_bad_parameters():
    with pytest.raises(InvalidParams):
        scan_conjecture1(4)
    with pytest.raises(InvalidParams):
        run_scan("th1", 100)
    with pytest.raises(InvalidParams):
        scan_corollary("th1", 100)


def test_report_records_round_trip():
    for rep in (scan_problem("p3", 200, 10), scan_corollary("cor2", 600), scan_theorem("th1", 300, 20)):
        again = ScanReport.from_records(rep.records())
        assert again.same_result(rep)
        assert again.hits == rep.hits
    assert ScanKind("cor1").dedupes and not ScanKind("problem1").dedupes
