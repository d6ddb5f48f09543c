"""Acceptance suite: one test per numbered criterion, each printing a
pass line (run with ``pytest -s`` to watch them stream).

Criterion 10's full table over block sizes 35..40 takes hours and runs only
when CUBICPATHS_EXTENDED=1; its mandatory fast subset (18..24) always runs.
"""
import itertools
import os
import random
import time

import pytest

from cubicpaths import (
    ArcTuple,
    Dag,
    DegreeProfile,
    SearchSpec,
    TupleClass,
    assemble_bound,
    brute_block,
    check_conjecture,
    count_paths,
    decode,
    edge_connectivity_at_least,
    encode,
    family_tuple,
    find_extremal,
    growth_factor,
    hamiltonize,
    is_on_ham_path,
    is_simple,
    reverse,
    solve_block,
    structural_3ec,
    tree_sort,
    tuple_mu,
    vertex_kinds,
)
from cubicpaths.search import ALL_PRUNES, enumerate_tuples
from cubicpaths.tuples import canonicalize, is_canonical, is_valid

from conftest import boundary_tuples, degrade, merged_tuples, random_topological_renumber

PAPER_TABLE = {35: 8233, 36: 11117, 37: 14033, 38: 17293, 39: 22781, 40: 28726}
PAPER_G2 = {35: 1.6740, 36: 1.6779, 37: 1.6756, 38: 1.6713, 39: 1.6729, 40: 1.6707}


def _passed(criterion: str) -> None:
    print(f"criterion {criterion}: PASS")


def test_criterion_01_golden_path_counts(truncated_tetrahedron, wedge12):
    t0 = time.time()
    assert count_paths(truncated_tetrahedron).total == 21
    assert count_paths(wedge12).total == 22
    golden = [
        ((4, 4, 4, 4), TupleClass.BOUNDARY, 5),
        ((2, 2, 3, 4, 6, 6), TupleClass.MERGED, 36),
        ((5, 2, 3, 4, 5), TupleClass.MERGED, 17),
        ((3, 3, 3, 6, 6, 6), TupleClass.MERGED, 16),
        ((5, 3, 3, 5, 5), TupleClass.MERGED, 10),
        ((2, 4, 5, 4, 5), TupleClass.BOUNDARY, 12),
    ]
    for values, klass, expected in golden:
        assert count_paths(decode(ArcTuple(values, klass))).total == expected, values
    assert time.time() - t0 < 1.0
    _passed("1 (golden path counts)")


def test_criterion_02_tuple_graph_counting_equivalence():
    checked = 0
    for length in range(1, 9):
        for t in boundary_tuples(length):
            assert tuple_mu(t).total == count_paths(decode(t)).total
            checked += 1
    for length in range(2, 9):
        for t in merged_tuples(length):
            assert tuple_mu(t).total == count_paths(decode(t)).total
            checked += 1
            twin = ArcTuple((t.values[1], t.values[0]) + t.values[2:], t.klass)
            if twin.values != t.values and is_valid(twin, 1):
                # the non-canonical twin decodes to the identical graph
                assert decode(twin) == decode(t)
                assert tuple_mu(twin).total == tuple_mu(t).total
                checked += 1
    assert checked > 80000
    _passed(f"2 (counting equivalence on {checked} tuples)")


def test_criterion_03_codec_roundtrip():
    checked = 0
    for length in range(1, 8):
        for t in boundary_tuples(length):
            assert encode(decode(t)) == t
            checked += 1
    for length in range(2, 8):
        for t in merged_tuples(length):
            assert is_canonical(t)
            assert encode(decode(t)) == t
            checked += 1
    _passed(f"3 (codec roundtrip on {checked} canonical tuples)")


def test_criterion_04_connectivity_oracles():
    checked = 0
    for length in range(2, 9):  # merged graphs on up to 14 vertices
        for t in merged_tuples(length):
            g = decode(t)
            brute = edge_connectivity_at_least(g, 3)
            structural, witness = structural_3ec(g)
            assert structural == brute, t.values
            if not structural:
                assert witness is not None
            assert is_valid(t, 3) == brute, t.values
            checked += 1
    _passed(f"4 (connectivity oracles agree on {checked} graphs)")


def _cubic_fleet(max_vertices: int):
    rng = random.Random(1812)
    length = 2
    while 2 * length - 2 <= max_vertices:
        for t in merged_tuples(length):
            g = decode(t)
            yield g
            yield reverse(g)
            yield degrade(g, rng, swaps=2)
            yield random_topological_renumber(degrade(g, rng, swaps=3), rng)
        length += 1


def test_criterion_05_hamiltonize_properties():
    checked = 0
    for g in _cubic_fleet(12):
        base = tree_sort(g)
        out, log = hamiltonize(g)
        assert is_on_ham_path(out)
        mu_in = count_paths(base).mu
        mu_out = count_paths(out).mu
        assert all(a >= b for a, b in zip(mu_out, mu_in))
        assert vertex_kinds(out) == vertex_kinds(base)
        if is_simple(base):
            assert is_simple(out)
        for ell in (2, 3):
            if edge_connectivity_at_least(base, ell):
                assert edge_connectivity_at_least(out, ell)
        for m in log:
            assert all(a >= b for a, b in zip(m.mu_after, m.mu_before))
        checked += 1
    _passed(f"5 (hamiltonize properties on {checked} graphs)")


def test_criterion_06_corollary_maxima():
    for n in range(3, 8):
        r = check_conjecture("conn", n)
        assert r.complete and r.max_total == 9 * 2 ** (n - 3), n
    for n in range(1, 8):
        r = check_conjecture("2ec", n)
        assert r.complete and r.max_total == 2**n + 1, n
    _passed("6 (connected and 2-edge-connected maxima match the closed forms)")


def test_criterion_07_fibonacci_conjecture_support():
    for n in range(3, 9):
        r = check_conjecture("fibonacci", n)
        assert r.complete, f"search inexhaustive at n={n}"
        assert not r.closed_form.exceeded, (
            f"COUNTEREXAMPLE record: {r.counterexamples}"
        )
        assert r.max_total == r.closed_form.exact_value, n
        assert family_tuple("wedge", n).values in r.witnesses
    _passed("7 (3-edge-connected maxima equal the Fibonacci form for n=3..8)")


def test_criterion_08_prune_soundness():
    for klass in (TupleClass.BOUNDARY, TupleClass.MERGED):
        lengths = range(1, 8) if klass is TupleClass.BOUNDARY else range(2, 8)
        for length in lengths:
            for conn in (1, 2, 3):
                for simple in (False, True):
                    plain = find_extremal(SearchSpec(length, klass, conn, simple))
                    pruned = find_extremal(
                        SearchSpec(length, klass, conn, simple, prunes=ALL_PRUNES)
                    )
                    assert plain.max_total == pruned.max_total, (
                        klass,
                        length,
                        conn,
                        simple,
                    )
    _passed("8 (prunes never change a maximum, every class, lengths <= 7)")


def test_criterion_09_block_solver_vs_oracle():
    t0 = time.time()
    for k in range(2, 13):
        assert solve_block(k).f == brute_block(k).f, k
    assert time.time() - t0 < 600
    _passed("9 (block solver equals the exhaustive oracle for k=2..12)")


def test_criterion_10_block_fast_subset():
    t0 = time.time()
    values = {}
    for k in range(13, 25):
        sol = solve_block(k)
        assert sol.proven_optimal, k
        values[k] = sol.f
    # oracle extension where feasible
    for k in (13, 14):
        assert values[k] == brute_block(k).f
    # internal relaxation bound and strict growth as structural checks
    for k in range(18, 25):
        assert values[k] > values[k - 1]
    assert time.time() - t0 < 1800
    _passed(f"10-fast (k=18..24 proven: {[values[k] for k in range(18, 25)]})")


@pytest.mark.skipif(
    not os.environ.get("CUBICPATHS_EXTENDED"),
    reason="hours-long full table; set CUBICPATHS_EXTENDED=1 to run",
)
def test_criterion_10_block_table_extended():
    for k, expected in PAPER_TABLE.items():
        sol = solve_block(k)
        assert sol.proven_optimal, k
        assert sol.f == expected, (k, sol.f, expected)
    _passed("10 (table of block maxima for k=35..40 reproduced exactly)")


def test_criterion_11_growth_arithmetic():
    t0 = time.time()
    for k, f in PAPER_TABLE.items():
        assert abs(growth_factor(f, k) - PAPER_G2[k]) < 2e-4, k
    report = assemble_bound(35, 40, f_overrides=PAPER_TABLE)
    assert report.argmax_k == 36
    assert abs(report.bound_base - 1.6779) < 2e-4
    assert time.time() - t0 < 1.0
    _passed("11 (growth table arithmetic and assembled 1.6779 base at k=36)")


def test_criterion_12_k21_anchor():
    t0 = time.time()
    sol = solve_block(21)
    assert sol.proven_optimal
    g2 = growth_factor(sol.f, 21)
    assert abs(g2 - 1.7108) <= 5e-4, (sol.f, g2)
    assert time.time() - t0 < 1800
    _passed(f"12 (f(21)={sol.f}, growth {g2:.5f} within 0.0005 of 1.7108)")
