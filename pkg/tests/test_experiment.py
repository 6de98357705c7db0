"""Experiment harness: seeding, cell runs, grids, point sampling."""

import random

import pytest

from polarvar.experiment import (CellSpec, derive_seed,
                                 expected_singular_dim, grid_triples,
                                 random_dense_poly, random_full_rank_matrix,
                                 run_cell, run_grid, sample_points_small_field,
                                 random_smooth_system, summarize_grid)
from polarvar.parsing import parse_polynomial
from polarvar.poly import evaluate


def test_derive_seed_is_deterministic_and_spread():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    seen = {derive_seed(0, n, p, k) for n in range(6) for p in range(4)
            for k in range(4)}
    assert len(seen) == 6 * 4 * 4
    assert all(0 <= s < 2**64 for s in seen)


def test_expected_singular_dimension_table():
    # hypersurfaces are always smooth, whatever the formula would say
    assert expected_singular_dim(5, 1, 1) == -1
    assert expected_singular_dim(6, 1, 1) == -1
    # p > 1 follows max{-1, n - p - (2i+2)}
    assert expected_singular_dim(5, 2, 1) == -1
    assert expected_singular_dim(6, 2, 1) == 0
    assert expected_singular_dim(7, 2, 1) == 1
    assert expected_singular_dim(6, 2, 2) == -1
    assert expected_singular_dim(4, 1, 1) == -1


def test_random_dense_poly_is_a_quadric(K):
    rng = random.Random(3)
    f = random_dense_poly(rng, K, 4)
    assert f.total_degree() == 2
    assert all(sum(m) <= 2 for m in f.terms)
    rng2 = random.Random(3)
    assert random_dense_poly(rng2, K, 4) == f


def test_random_full_rank_matrix(K):
    rng = random.Random(9)
    M = random_full_rank_matrix(rng, K, 3, 5)
    assert M.rank() == 3


def test_cell_spec_validation():
    with pytest.raises(ValueError):
        CellSpec(2, 2, 1)
    with pytest.raises(ValueError):
        CellSpec(3, 1, 3)
    with pytest.raises(ValueError):
        CellSpec(3, 1, 1, mode="bogus")


def test_cell_runs_deterministically(K):
    spec = CellSpec(4, 2, 1, seed=derive_seed(5, 4, 2, 0))
    r1 = run_cell(spec)
    r2 = run_cell(spec)
    assert r1.to_record() == r2.to_record()
    assert r1.status == "ok"
    assert r1.match is True
    assert r1.dim_W == 1
    rec = r1.to_record()
    assert rec["elapsed_ms"] is None
    assert r1.to_record(with_timing=True)["elapsed_ms"] >= 0


def test_grid_triples_enumeration():
    assert len(grid_triples(4)) == 10
    assert grid_triples(2) == [(2, 1, 1)]


def test_small_grid_matches_everywhere(K):
    results = run_grid(3, seeds=1, master_seed=31)
    assert len(results) == 4
    assert all(r.status == "ok" for r in results)
    assert all(r.match for r in results)
    # dual flavor works through the same path
    dual = run_grid(3, seeds=1, master_seed=31, flavor="dual")
    assert all(r.status == "ok" and r.dim_W in (-1, r.n - r.p - r.i)
               for r in dual)
    summary = summarize_grid(results)
    assert "matched: 4" in summary


def test_grid_shares_draws_across_i(K):
    # cells differing only in i derive their system from (master, n, p, k),
    # so the polar dimensions line up along a single nested matrix
    results = run_grid(4, seeds=1, master_seed=77)
    by_key = {(r.n, r.p, r.i): r for r in results}
    assert by_key[(4, 1, 1)].seed == by_key[(4, 1, 3)].seed
    assert by_key[(4, 1, 1)].seed != by_key[(4, 2, 1)].seed


def test_circle_points_over_f7(F7):
    circle = parse_polynomial("x1^2+x2^2-1", 2, F7)
    out = sample_points_small_field([circle])
    assert out.exhaustive and out.complete
    assert len(out.points) == 8
    for pt, regular in out.points:
        assert evaluate(circle, pt) == 0
        assert regular  # the gradient vanishes only at the origin


def test_empty_system_has_no_points(F7):
    F = [parse_polynomial("x1", 2, F7), parse_polynomial("x1+1", 2, F7)]
    out = sample_points_small_field(F)
    assert out.exhaustive and out.complete
    assert out.points == ()


def test_singular_point_tagging(F7):
    cross = parse_polynomial("x1*x2", 2, F7)
    out = sample_points_small_field([cross])
    tags = {pt.coordinates: regular for pt, regular in out.points}
    assert tags[(0, 0)] is False
    assert tags[(0, 1)] is True
    assert len(out.points) == 13  # both axes over F_7


def test_random_smooth_system_verifies(K):
    from polarvar.polar import verify_smooth_complete_intersection
    F = random_smooth_system(K, 3, 2, seed=8)
    assert verify_smooth_complete_intersection(F).ok


def test_full_and_delta_modes_agree(K):
    # both routes to the singular dimension coincide, including on a cell
    # with a genuinely nonempty singular locus
    for (n, p, i) in [(4, 2, 1), (5, 2, 1), (6, 2, 1)]:
        seed = derive_seed(1234, n, p, 0)
        full = run_cell(CellSpec(n, p, i, seed=seed, mode="full"))
        delta = run_cell(CellSpec(n, p, i, seed=seed, mode="delta"))
        assert full.status == delta.status == "ok"
        assert full.mode == "full"
        assert full.dim_sing == delta.dim_sing
    assert full.dim_sing == 0  # (6,2,1) has a zero-dimensional singular locus
