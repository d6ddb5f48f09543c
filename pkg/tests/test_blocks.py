import math

import pytest

from cubicpaths import assemble_bound, brute_block, growth_factor, solve_block
from cubicpaths.blocks import BRUTE_LIMIT, check_assignment, recompute_counts

PAPER_TABLE = {35: 8233, 36: 11117, 37: 14033, 38: 17293, 39: 22781, 40: 28726}
PAPER_G2 = {35: 1.6740, 36: 1.6779, 37: 1.6756, 38: 1.6713, 39: 1.6729, 40: 1.6707}


def test_smallest_blocks():
    assert brute_block(2).f == 2
    assert brute_block(3).f == 3
    assert solve_block(2).f == 2


def test_solver_matches_oracle_small():
    for k in range(2, 11):
        assert solve_block(k).f == brute_block(k).f


def test_brute_guard():
    with pytest.raises(ValueError):
        brute_block(BRUTE_LIMIT + 1)
    with pytest.raises(ValueError):
        solve_block(1)


def test_returned_assignments_check_out():
    for k in (5, 8, 11):
        for sol in (solve_block(k), brute_block(k)):
            assert check_assignment(k, sol.assignment) == []
            assert recompute_counts(k, sol.assignment) == sol.f
            assert sol.proven_optimal


def test_check_assignment_flags_problems():
    sol = solve_block(6)
    missing = tuple(e for e in sol.assignment if e != (0, 1))
    assert any("path edge" in v for v in check_assignment(6, missing))
    # strip one real arc: the degree constraint must complain
    arc = next(e for e in sol.assignment if e[1] > e[0] + 1)
    stripped = tuple(e for e in sol.assignment if e != arc)
    assert any("degree" in v for v in check_assignment(6, stripped))


def test_growth_factor_values():
    assert growth_factor(1, 7) == 1.0
    assert abs(growth_factor(11117, 36) - 1.6779) < 2e-4
    assert abs(growth_factor(28726, 40) - 1.6707) < 2e-4
    assert growth_factor(4, 4) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        growth_factor(0, 5)


def test_paper_growth_row_tolerance():
    for k, f in PAPER_TABLE.items():
        assert abs(growth_factor(f, k) - PAPER_G2[k]) < 2e-4


def test_assemble_bound_injected():
    report = assemble_bound(35, 40, f_overrides=PAPER_TABLE)
    assert report.argmax_k == 36
    assert abs(report.bound_base - 1.6779) < 2e-4
    assert report.rigorous


def test_assemble_bound_window_guard():
    with pytest.raises(ValueError):
        assemble_bound(35, 39)


def test_assemble_bound_small_range():
    report = assemble_bound(6, 11)
    assert report.rigorous
    assert [r.f for r in report.rows] == [7, 9, 11, 15, 19, 23]
    assert report.final_block_constant == 5  # max f over k = 2..5
    for row in report.rows:
        assert row.g2 == pytest.approx(math.exp(2 * math.log(row.f) / row.k), rel=1e-12)


def test_budget_exhaustion_flags():
    from cubicpaths.blocks import _F_CACHE

    saved = dict(_F_CACHE)
    _F_CACHE.clear()
    try:
        sol = solve_block(10, budget=150, use_cache=False)
        assert not sol.proven_optimal
        assert check_assignment(10, sol.assignment) == []
        assert sol.f <= solve_block(10).f
    finally:
        _F_CACHE.clear()
        _F_CACHE.update(saved)
