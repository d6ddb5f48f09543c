import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicpaths import (
    ArcTuple,
    Dag,
    DegreeProfile,
    InvalidDagError,
    count_paths,
    decode,
    edge_connectivity_at_least,
    infer_profile,
    is_on_ham_path,
    reverse,
    structural_3ec,
    validate,
    vertex_kinds,
)


def test_truncated_tetrahedron_is_valid(truncated_tetrahedron):
    assert validate(truncated_tetrahedron).ok
    assert truncated_tetrahedron.profile is DegreeProfile.THREE_REGULAR


def test_boundary_profile_rejects_single_edge(single_edge):
    declared = Dag(2, ((1, 2),), DegreeProfile.BOUNDARY_DEG2)
    report = validate(declared)
    assert not report.ok
    assert any("degree" in v for v in report.violations)


def test_wedge_is_valid(wedge12):
    assert validate(wedge12).ok


def test_count_truncated_tetrahedron(truncated_tetrahedron):
    pc = count_paths(truncated_tetrahedron)
    assert pc.total == 21
    assert pc.mu == (1, 1, 2, 2, 2, 4, 4, 5, 9, 9, 11, 21)


def test_count_wedge(wedge12):
    assert count_paths(wedge12).total == 22


def test_count_single_edge(single_edge):
    assert count_paths(single_edge).total == 1


def test_reverse_single_edge(single_edge):
    assert reverse(single_edge) == single_edge


def test_reverse_preserves_totals(truncated_tetrahedron, wedge12):
    assert count_paths(reverse(truncated_tetrahedron)).total == 21
    assert reverse(reverse(wedge12)) == wedge12


def test_connectivity_oracle(truncated_tetrahedron, single_edge):
    assert edge_connectivity_at_least(truncated_tetrahedron, 3)
    assert edge_connectivity_at_least(single_edge, 1)
    assert not edge_connectivity_at_least(single_edge, 2)
    cut = decode(ArcTuple((2, 2, 4, 4)))
    assert not edge_connectivity_at_least(cut, 3)
    assert not edge_connectivity_at_least(cut, 2)  # the same interval is a bridge


def test_ham_path_detection(truncated_tetrahedron, six_vertex, single_edge):
    assert is_on_ham_path(truncated_tetrahedron)
    assert is_on_ham_path(single_edge)
    assert not is_on_ham_path(six_vertex)


def test_six_vertex_has_no_ham_order(six_vertex):
    # no orientation-preserving renumbering puts every consecutive edge in place
    import itertools

    n = six_vertex.vertex_count
    for perm in itertools.permutations(range(1, n + 1)):
        pos = {old: new for new, old in enumerate(perm, 1)}
        mapped = [(pos[u], pos[v]) for u, v in six_vertex.edges]
        if any(u >= v for u, v in mapped):
            continue
        renumbered = Dag(n, tuple(mapped), six_vertex.profile)
        assert not is_on_ham_path(renumbered)


def test_vertex_kinds(truncated_tetrahedron):
    assert vertex_kinds(truncated_tetrahedron) == (0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1)


def test_vertex_kinds_merged_square():
    assert vertex_kinds(decode(ArcTuple((4, 4, 4, 4)))) == (0, 0, 0, 0, 1, 1, 1, 1)


def test_vertex_kinds_rejects_profileless(single_edge):
    with pytest.raises(InvalidDagError):
        vertex_kinds(single_edge)


def test_structural_3ec_on_known_graphs(truncated_tetrahedron, wedge12):
    assert structural_3ec(truncated_tetrahedron) == (True, None)
    assert structural_3ec(wedge12) == (True, None)


def test_structural_3ec_interval_witness():
    # doubling family member: prefix structure blocks 3-edge connectivity
    from cubicpaths import TupleClass

    g = decode(ArcTuple((5, 2, 3, 4, 5), TupleClass.MERGED))
    ok, witness = structural_3ec(g)
    assert not ok
    assert witness[0] in ("initial-segment", "interval")
    assert not edge_connectivity_at_least(g, 3)


def test_infer_profile(truncated_tetrahedron, single_edge):
    assert infer_profile(12, truncated_tetrahedron.edges) is DegreeProfile.THREE_REGULAR
    assert infer_profile(2, single_edge.edges) is None
    assert infer_profile(2, ((1, 2), (1, 2))) is DegreeProfile.BOUNDARY_DEG2


@st.composite
def boundary_tuples_strategy(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    values = tuple(draw(st.integers(min_value=i, max_value=n)) for i in range(1, n + 1))
    return ArcTuple(values)


@given(boundary_tuples_strategy())
@settings(max_examples=150, deadline=None)
def test_mu_monotone_along_edges(t):
    g = decode(t)
    pc = count_paths(g)
    assert all(m >= 1 for m in pc.mu)
    for u, v in g.edges:
        assert pc.at(v) >= pc.at(u)


@given(boundary_tuples_strategy())
@settings(max_examples=150, deadline=None)
def test_reversal_preserves_totals_property(t):
    g = decode(t)
    assert count_paths(reverse(g)).total == count_paths(g).total


def test_three_regular_total_formula(truncated_tetrahedron, six_vertex):
    # total = 3 + sum of counts at the outgoing vertices after the source
    for g in (truncated_tetrahedron, six_vertex):
        pc = count_paths(g)
        kinds = vertex_kinds(g)
        outgoing = [v for v in range(1, g.vertex_count + 1) if kinds[v - 1] == 0]
        assert pc.total == 3 + sum(pc.at(v) for v in outgoing[1:])
