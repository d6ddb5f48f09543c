"""Bijection between graphs on a directed Hamiltonian path and arc tuples.

A graph in the boundary-degree-2 class on 2n vertices has exactly n arcs
(edges off the Hamiltonian path).  Arcs are labelled 1..n by the order of
their outgoing endpoints, and entry i of the tuple records the largest
label used strictly before arc i's incoming endpoint.  Any tuple with
values[i] >= i+1 (1-based: v_i >= i) decodes back to such a graph once the
incoming vertices sharing a value are placed in increasing label order;
that ordering is the canonical form used everywhere here.

The merged class represents exactly 3-regular graphs: an (n+1)-tuple
decodes to a boundary graph on 2n+2 vertices whose first two and last two
vertices are then fused into a degree-3 source and sink.  Fusing makes the
first two entries interchangeable, so canonical merged tuples keep
values[0] >= values[1].
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .dag import Dag, DegreeProfile, InvalidDagError, is_on_ham_path, require_valid


class TupleClass(Enum):
    BOUNDARY = "boundary"  # degree-2 source/sink, graph on 2n vertices
    MERGED = "merged"      # exactly 3-regular, graph on 2n-2 vertices


class InvalidTupleError(ValueError):
    def __init__(self, issues):
        self.issues = tuple(issues)
        super().__init__("; ".join(self.issues) or "invalid tuple")


@dataclass(frozen=True)
class ArcTuple:
    values: tuple[int, ...]
    klass: TupleClass = TupleClass.BOUNDARY

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ArcMu:
    """Source-path counts at each arc's outgoing endpoint, plus the total."""

    arc_mu: tuple[int, ...]
    total: int


def parse_tuple(text: str, klass: TupleClass = TupleClass.BOUNDARY) -> ArcTuple:
    """Parse the comma-separated text form, e.g. "2,4,5,4,5"."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidTupleError((f"cannot parse tuple text {text!r}",)) from exc
    return ArcTuple(values, klass)


def format_tuple(t: ArcTuple) -> str:
    return ",".join(str(v) for v in t.values)


def class_issues(t: ArcTuple) -> list[str]:
    """Violations of the class invariants (ignoring connectivity)."""
    vals = t.values
    n = len(vals)
    out = []
    if n == 0:
        return ["tuple must be nonempty"]
    for i, v in enumerate(vals, 1):
        if v < i:
            out.append(f"entry {i} is {v}, below its floor {i}")
        if v > n:
            out.append(f"entry {i} is {v}, above the largest label {n}")
    if t.klass is TupleClass.MERGED:
        if n < 2:
            out.append("merged tuples need at least 2 entries")
        else:
            if vals[0] < 2:
                out.append("merged tuples require the first entry to be >= 2")
            if vals.count(n) < 2:
                out.append(f"merged tuples require the value {n} at least twice")
    return out


def is_canonical(t: ArcTuple) -> bool:
    if t.klass is TupleClass.MERGED and len(t) >= 2:
        return t.values[0] >= t.values[1]
    return True


def canonicalize(t: ArcTuple) -> ArcTuple:
    if not is_canonical(t):
        v = list(t.values)
        v[0], v[1] = v[1], v[0]
        return ArcTuple(tuple(v), t.klass)
    return t


def _bridge_prefix(vals: tuple[int, ...]) -> int | None:
    """Smallest k < n with values[j] <= k for all j <= k, if any.

    Such a k marks an initial segment joined to the rest by one path edge.
    """
    n = len(vals)
    running_max = 0
    for k in range(1, n):
        running_max = max(running_max, vals[k - 1])
        if running_max <= k:
            return k
    return None


def _self_contained_interval(
    vals: tuple[int, ...], lo: int, hi: int | None = None
) -> tuple[int, int] | None:
    """First label interval [a, k] within [lo, hi] equal to {j : v_j in [a, k]}.

    Arcs with labels in such an interval begin and end inside it, so only
    the two boundary path edges attach it to the rest of the graph.  The
    full interval [1, n] is the whole graph and never counts.

    The member set {j : v_j in [a, k]} equals [a..k] exactly when it has
    k-a+1 elements whose minimum is a and maximum is k, which an extending
    scan maintains in constant time per step.
    """
    n = len(vals)
    if hi is None:
        hi = n
    by_value: list[list[int]] = [[] for _ in range(n + 1)]
    for j, v in enumerate(vals, 1):
        by_value[v].append(j)
    for a in range(lo, hi + 1):
        cnt = 0
        mn = n + 1
        mx = 0
        for k in range(a, hi + 1):
            for j in by_value[k]:
                cnt += 1
                if j < mn:
                    mn = j
                if j > mx:
                    mx = j
            if a == 1 and k == n:
                continue
            if cnt == k - a + 1 and mn == a and mx == k:
                return (a, k)
    return None


def validity_issues(t: ArcTuple, connectivity: int = 1) -> list[str]:
    """Class invariants plus the tuple-level connectivity conditions.

    connectivity 1 asks only for a decodable member of the class (all of
    which are connected via the Hamiltonian path); 2 excludes bridges;
    3 applies the interval conditions that encode 3-edge connectivity.
    """
    if connectivity not in (1, 2, 3):
        raise ValueError("connectivity must be 1, 2 or 3")
    out = class_issues(t)
    if out or connectivity == 1:
        return out
    vals = t.values
    n = len(vals)
    if connectivity == 2:
        k = _bridge_prefix(vals)
        if k is not None:
            out.append(
                f"labels 1..{k} all land by {k}: the path edge after them is a bridge"
            )
        return out
    # connectivity == 3; the interval and prefix conditions below subsume
    # the bridge condition for their respective classes.
    if t.klass is TupleClass.BOUNDARY:
        hit = _self_contained_interval(vals, 1)
        if hit is not None:
            out.append(
                f"label interval [{hit[0]}, {hit[1]}] is self-contained: "
                "only two edges cross its boundary"
            )
        return out
    # Merged class.  The fused source absorbs the boundary after gap 1, so
    # cut boundaries sit after gaps 2..n-1; each needs >= 2 crossing arcs
    # on top of its path edge.
    by_value = [0] * (n + 1)
    for v in vals:
        by_value[v] += 1
    count_le = by_value[1]
    for k in range(2, n):
        count_le += by_value[k]
        if k - count_le < 2:
            out.append(
                f"only {k - count_le} arcs cross the boundary after gap {k}: "
                "two deletions disconnect the prefix"
            )
            return out
    # Interior intervals cannot touch the fused source or sink, which pins
    # their label range to [3, n-1].
    hit = _self_contained_interval(vals, 3, n - 1)
    if hit is not None:
        out.append(
            f"label interval [{hit[0]}, {hit[1]}] is self-contained: "
            "only two edges cross its boundary"
        )
    return out


def is_valid(t: ArcTuple, connectivity: int = 1) -> bool:
    return not validity_issues(t, connectivity)


def _boundary_layout(vals: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Positions of the n outgoing and n incoming vertices on 2n vertices."""
    n = len(vals)
    heads_by_gap: list[list[int]] = [[] for _ in range(n + 1)]
    for j, v in enumerate(vals, 1):
        heads_by_gap[v].append(j)  # ascending label = canonical order in a gap
    tail_pos = [0] * (n + 1)
    head_pos = [0] * (n + 1)
    pos = 0
    for i in range(1, n + 1):
        pos += 1
        tail_pos[i] = pos
        for j in heads_by_gap[i]:
            pos += 1
            head_pos[j] = pos
    return tail_pos, head_pos


def decode(t: ArcTuple) -> Dag:
    """Rebuild the graph a tuple denotes (canonical incoming-vertex order)."""
    issues = class_issues(t)
    if issues:
        raise InvalidTupleError(issues)
    vals = t.values
    n = len(vals)
    tail_pos, head_pos = _boundary_layout(vals)
    edges = [(p, p + 1) for p in range(1, 2 * n)]
    edges += [(tail_pos[i], head_pos[i]) for i in range(1, n + 1)]
    if t.klass is TupleClass.BOUNDARY:
        return Dag(2 * n, tuple(edges), DegreeProfile.BOUNDARY_DEG2)

    # merged: fuse vertices {1, 2} into the source and {2n-1, 2n} into the
    # sink; the two dropped path edges become internal to the fused vertices.
    def shift(p: int) -> int:
        if p <= 2:
            return 1
        if p >= 2 * n - 1:
            return 2 * n - 2
        return p - 1

    merged = []
    for u, v in edges:
        if (u, v) in ((1, 2), (2 * n - 1, 2 * n)):
            continue
        merged.append((shift(u), shift(v)))
    return Dag(2 * n - 2, tuple(merged), DegreeProfile.THREE_REGULAR)


def encode(dag: Dag) -> ArcTuple:
    """Read the arc tuple off a graph on a Hamiltonian path.

    Boundary-degree-2 graphs yield boundary tuples; 3-regular graphs yield
    canonical merged tuples (the two source arcs are ordered so the first
    entry dominates the second).
    """
    require_valid(dag, with_profile=True)
    if not is_on_ham_path(dag):
        raise InvalidDagError(("encode requires a Hamiltonian path",))
    n_vertices = dag.vertex_count
    path_left = {(i, i + 1): 1 for i in range(1, n_vertices)}
    arcs = []
    for e in dag.edges:
        if path_left.get(e, 0) > 0:
            path_left[e] -= 1
            continue
        arcs.append(e)

    merged = dag.profile is DegreeProfile.THREE_REGULAR
    # Arc tails with multiplicity; in the merged class the source carries
    # two arcs and is the only possible tie.
    tails = sorted(u for u, _ in arcs)

    def rho_of(head: int) -> int:
        """Largest label used strictly before `head` = #tails before it."""
        cnt = 0
        for u in tails:
            if u < head:
                cnt += 1
        return cnt

    # Labels follow tail order; the source's pair is ordered dominant-first
    # so merged tuples come out canonical.
    labelled = sorted(arcs, key=lambda e: (e[0], -rho_of(e[1]), e[1]))
    values = tuple(rho_of(v) for _, v in labelled)
    klass = TupleClass.MERGED if merged else TupleClass.BOUNDARY
    t = ArcTuple(values, klass)
    issues = class_issues(t)
    if issues:
        raise InvalidDagError(tuple(f"encoded tuple invalid: {s}" for s in issues))
    return t


def tuple_mu(t: ArcTuple) -> ArcMu:
    """Path counts at arc tails via the last-arc recurrence.

    mu(tail of arc i+1) = 1 + sum of mu(tail of arc k) over arcs k whose
    value is at most i; the grand total adds every arc's count to 1.
    """
    issues = class_issues(t)
    if issues:
        raise InvalidTupleError(issues)
    vals = t.values
    n = len(vals)
    arc_mu = [0] * (n + 1)
    by_value = [0] * (n + 1)
    cum = 0  # sum of arc_mu[k] over processed arcs with value <= i-1
    for i in range(1, n + 1):
        if i >= 2:
            cum += by_value[i - 1]
        arc_mu[i] = 1 + cum
        by_value[vals[i - 1]] += arc_mu[i]
    return ArcMu(tuple(arc_mu[1:]), 1 + sum(arc_mu[1:]))
