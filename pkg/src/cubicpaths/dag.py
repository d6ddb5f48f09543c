"""Ordered acyclic multigraph model, path counting and connectivity oracles.

Vertices are numbered 1..N and every edge (u, v) satisfies u < v, so the
vertex numbering doubles as a topological order and acyclicity holds by
construction.  Parallel edges are repeated pairs; every operation counts
them with multiplicity.  All types are immutable and all functions pure,
so values can be shared freely between threads.

Path counts are plain Python ints (arbitrary precision); they grow roughly
like 1.68**n, which overflows any fixed-width type long before n = 60.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

Edge = tuple[int, int]


class DegreeProfile(Enum):
    """Degree discipline a graph claims to satisfy."""

    THREE_REGULAR = "3-regular"      # every vertex has total degree 3
    BOUNDARY_DEG2 = "boundary-deg2"  # degree-2 source and sink, degree-3 interior


class InvalidDagError(ValueError):
    """An operation required a valid graph and got violations instead."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations) or "invalid graph")


@dataclass(frozen=True)
class Dag:
    """Acyclic directed multigraph with a unique source (1) and sink (N).

    ``profile`` is a claim, not a fact: ``validate`` reports violations as
    data.  ``None`` means no degree discipline is claimed (useful for
    degenerate plumbing graphs such as a single edge).
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    profile: DegreeProfile | None = None

    def __post_init__(self) -> None:
        canon = tuple(sorted((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(self, "edges", canon)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class PathCounts:
    """Per-vertex counts of directed paths from the source.

    ``mu[i]`` belongs to vertex i+1; ``total`` equals the count at the sink.
    """

    mu: tuple[int, ...]
    total: int

    def at(self, vertex: int) -> int:
        return self.mu[vertex - 1]


def degree_vectors(dag: Dag) -> tuple[list[int], list[int]]:
    """Return 1-based (indegree, outdegree) vectors; index 0 is unused."""
    indeg = [0] * (dag.vertex_count + 1)
    outdeg = [0] * (dag.vertex_count + 1)
    for u, v in dag.edges:
        outdeg[u] += 1
        indeg[v] += 1
    return indeg, outdeg


def in_adjacency(dag: Dag) -> list[list[int]]:
    """1-based in-neighbour lists, with multiplicity."""
    adj: list[list[int]] = [[] for _ in range(dag.vertex_count + 1)]
    for u, v in dag.edges:
        adj[v].append(u)
    return adj


def structural_violations(dag: Dag) -> list[str]:
    out = []
    n = dag.vertex_count
    if n < 2:
        out.append(f"vertex count {n} < 2")
        return out
    for u, v in dag.edges:
        if not (1 <= u < v <= n):
            out.append(f"edge ({u}, {v}) violates 1 <= tail < head <= {n}")
    if out:
        return out
    indeg, outdeg = degree_vectors(dag)
    for v in range(2, n + 1):
        if indeg[v] == 0:
            out.append(f"vertex {v} has indegree 0 (source must be unique)")
    for v in range(1, n):
        if outdeg[v] == 0:
            out.append(f"vertex {v} has outdegree 0 (sink must be unique)")
    return out


def profile_violations(dag: Dag) -> list[str]:
    if dag.profile is None:
        return []
    indeg, outdeg = degree_vectors(dag)
    n = dag.vertex_count
    deg = [indeg[v] + outdeg[v] for v in range(n + 1)]
    out = []
    if dag.profile is DegreeProfile.THREE_REGULAR:
        for v in range(1, n + 1):
            if deg[v] != 3:
                out.append(f"vertex {v} has degree {deg[v]}, expected 3")
    else:
        for v in (1, n):
            if deg[v] != 2:
                out.append(f"boundary vertex {v} has degree {deg[v]}, expected 2")
        for v in range(2, n):
            if deg[v] != 3:
                out.append(f"interior vertex {v} has degree {deg[v]}, expected 3")
    return out


def validate(dag: Dag) -> ValidationReport:
    """Check every invariant; violations are data, not exceptions."""
    out = structural_violations(dag)
    if not out:
        out += profile_violations(dag)
    return ValidationReport(tuple(out))


def require_valid(dag: Dag, *, with_profile: bool = False) -> None:
    bad = structural_violations(dag)
    if not bad and with_profile:
        if dag.profile is None:
            bad = ["no degree profile declared"]
        else:
            bad = profile_violations(dag)
    if bad:
        raise InvalidDagError(bad)


def infer_profile(vertex_count: int, edges) -> DegreeProfile | None:
    """Guess the degree profile from the degree sequence, if one fits."""
    probe = Dag(vertex_count, tuple(edges), DegreeProfile.THREE_REGULAR)
    if not profile_violations(probe):
        return DegreeProfile.THREE_REGULAR
    probe = Dag(vertex_count, tuple(edges), DegreeProfile.BOUNDARY_DEG2)
    if not profile_violations(probe):
        return DegreeProfile.BOUNDARY_DEG2
    return None


def count_paths(dag: Dag) -> PathCounts:
    """Count directed source-to-vertex paths by the in-edge recurrence."""
    require_valid(dag)
    mu = [0] * (dag.vertex_count + 1)
    mu[1] = 1
    adj = in_adjacency(dag)
    for v in range(2, dag.vertex_count + 1):
        mu[v] = sum(mu[u] for u in adj[v])
    return PathCounts(tuple(mu[1:]), mu[dag.vertex_count])


def reverse(dag: Dag) -> Dag:
    """Reverse every edge and renumber so vertex i becomes N+1-i."""
    require_valid(dag)
    n = dag.vertex_count
    flipped = tuple((n + 1 - v, n + 1 - u) for u, v in dag.edges)
    return Dag(n, flipped, dag.profile)


def _connected_without(n: int, edges: tuple[Edge, ...], skip: tuple[int, ...]) -> bool:
    parent = list(range(n + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    skipset = set(skip)
    comps = n
    for idx, (u, v) in enumerate(edges):
        if idx in skipset:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
            if comps == 1:
                return True
    return comps == 1


def edge_connectivity_at_least(dag: Dag, ell: int) -> bool:
    """Brute-force oracle: underlying multigraph survives any < ell deletions.

    Deliberately exhaustive (ell <= 3 only): instance sizes keep the cost
    trivial and the oracle obviously correct.
    """
    if ell not in (1, 2, 3):
        raise ValueError("ell must be 1, 2 or 3")
    require_valid(dag)
    m = dag.n_edges
    if m < ell - 1:
        # deleting every edge already isolates vertices
        return False
    for skip in itertools.combinations(range(m), ell - 1):
        if not _connected_without(dag.vertex_count, dag.edges, skip):
            return False
    return _connected_without(dag.vertex_count, dag.edges, ())


def is_on_ham_path(dag: Dag) -> bool:
    """True iff the consecutive edge (i, i+1) is present for every i."""
    require_valid(dag)
    present = set(dag.edges)
    return all((i, i + 1) in present for i in range(1, dag.vertex_count))


def is_simple(dag: Dag) -> bool:
    return len(set(dag.edges)) == dag.n_edges


def vertex_kinds(dag: Dag) -> tuple[int, ...]:
    """0/1 labels: 1 for indegree >= 2 (incoming), 0 for outdegree >= 2.

    Requires a declared, satisfied degree profile, under which the two cases
    are exhaustive and mutually exclusive.
    """
    require_valid(dag, with_profile=True)
    indeg, outdeg = degree_vectors(dag)
    kinds = []
    for v in range(1, dag.vertex_count + 1):
        if indeg[v] >= 2:
            kinds.append(1)
        else:
            assert outdeg[v] >= 2, f"vertex {v} is neither incoming nor outgoing"
            kinds.append(0)
    return tuple(kinds)


Witness = tuple  # ("initial-segment", k) or ("interval", i, j)


def structural_3ec(dag: Dag) -> tuple[bool, Witness | None]:
    """3-edge-connectivity test for 3-regular graphs on a Hamiltonian path.

    Scans for the two structures that characterise a 2-edge cut: an initial
    segment holding strictly more indegree-2 than outdegree-2 vertices, or a
    proper interval whose only crossing edges are its two path edges.
    Returns (False, witness) on the first structure found, scanning initial
    segments first and intervals in lexicographic order.
    """
    require_valid(dag, with_profile=True)
    if dag.profile is not DegreeProfile.THREE_REGULAR:
        raise InvalidDagError(("structural_3ec requires a 3-regular graph",))
    if not is_on_ham_path(dag):
        raise InvalidDagError(("structural_3ec requires a Hamiltonian path",))
    n = dag.vertex_count
    indeg, outdeg = degree_vectors(dag)
    balance = 0
    for k in range(1, n + 1):
        if indeg[k] == 2:
            balance += 1
        elif outdeg[k] == 2:
            balance -= 1
        if balance > 0:
            return False, ("initial-segment", k)
    for i in range(2, n):
        for j in range(i + 1, n):
            crossing = 0
            for u, v in dag.edges:
                if (i <= u <= j) != (i <= v <= j):
                    crossing += 1
                    if crossing > 2:
                        break
            if crossing == 2:
                return False, ("interval", i, j)
    return True, None
