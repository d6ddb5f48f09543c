"""Rewrites a 3-regular acyclic digraph onto a directed Hamiltonian path.

The pipeline renumbers the graph so path counts are weakly increasing
(``tree_sort``), then applies two families of degree-preserving edge swaps:
outgoing moves hook each outdegree-2 vertex to its predecessor without
changing any count, and incoming moves do the same for indegree-2 vertices
while only ever increasing counts.  The result has every consecutive edge
(i, i+1), the same vertex kinds, and inherits simplicity and 2-/3-edge
connectivity from the input.

Moves are order-dependent, so a single rewrite runs sequentially; distinct
graphs can be processed concurrently without restriction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dag import (
    Dag,
    DegreeProfile,
    InvalidDagError,
    count_paths,
    in_adjacency,
    is_on_ham_path,
    require_valid,
)

Edge = tuple[int, int]
Swap = tuple[tuple[Edge, Edge], tuple[Edge, Edge]]  # (removed pair, added pair)


class MoveError(ValueError):
    """A local move's precondition failed."""


@dataclass(frozen=True)
class Move:
    kind: str  # "outgoing" or "incoming"
    focus: int
    removed: tuple[Edge, Edge]
    added: tuple[Edge, Edge]
    mu_before: tuple[int, ...]
    mu_after: tuple[int, ...]


MoveLog = tuple[Move, ...]


def _require_cubic(dag: Dag) -> None:
    require_valid(dag, with_profile=True)
    if dag.profile is not DegreeProfile.THREE_REGULAR:
        raise InvalidDagError(("operation requires a 3-regular graph",))


def _chain_root(v: int, in_adj: list[list[int]], outdeg: list[int]) -> int:
    """Walk the unique in-edge backwards while the tail is outdegree-2."""
    while outdeg[v] >= 2 and v != 1:
        v = in_adj[v][0]
    return v


def tree_sort_order(dag: Dag) -> tuple[int, ...]:
    """New vertex order making path counts weakly increasing.

    Each outdegree-2 vertex chains backwards through its unique in-edge to a
    root (the source or an indegree-2 vertex); counts are constant on each
    such tree.  Trees are made contiguous (root first, members in original
    relative order) and then stably sorted by their count.
    """
    _require_cubic(dag)
    n = dag.vertex_count
    in_adj = in_adjacency(dag)
    outdeg = [0] * (n + 1)
    for u, _ in dag.edges:
        outdeg[u] += 1
    mu = count_paths(dag).mu

    members: dict[int, list[int]] = {}
    roots = []
    for v in range(1, n + 1):
        if v == 1 or len(in_adj[v]) >= 2:
            roots.append(v)
            members[v] = [v]
    for v in range(2, n + 1):
        if outdeg[v] >= 2:
            members[_chain_root(v, in_adj, outdeg)].append(v)

    # members were appended in increasing vertex order, so each block is
    # already internally ordered; a stable sort on the root's count finishes.
    roots.sort(key=lambda r: mu[r - 1])
    order = []
    for r in roots:
        order.extend(members[r])
    return tuple(order)


def renumber(dag: Dag, order: tuple[int, ...]) -> Dag:
    """Apply a new vertex order (position in `order` = new number)."""
    pos = {old: new for new, old in enumerate(order, 1)}
    edges = tuple((pos[u], pos[v]) for u, v in dag.edges)
    return Dag(dag.vertex_count, edges, dag.profile)


def tree_sort(dag: Dag) -> Dag:
    out = renumber(dag, tree_sort_order(dag))
    require_valid(out)  # the reorder must keep every edge forward
    return out


def _replace_edges(dag: Dag, swap: Swap) -> Dag:
    removed, added = swap
    edges = list(dag.edges)
    for e in removed:
        edges.remove(e)
    edges.extend(added)
    return Dag(dag.vertex_count, tuple(edges), dag.profile)


def _outgoing_swap(dag: Dag, b: int) -> Swap:
    indeg = [0] * (dag.vertex_count + 1)
    outs: dict[int, list[int]] = {}
    for u, v in dag.edges:
        indeg[v] += 1
        outs.setdefault(u, []).append(v)
    if b < 3 or b > dag.vertex_count:
        raise MoveError(f"vertex {b} has no movable predecessor")
    if len(outs.get(b, ())) != 2:
        raise MoveError(f"vertex {b} is not outdegree-2")
    p = b - 1
    if b in outs.get(p, ()):
        raise MoveError(f"vertex {b} already follows {p}")
    if len(outs.get(p, ())) != 2:
        raise MoveError(f"predecessor {p} is not outdegree-2")
    if indeg[b] != 1:
        raise MoveError(f"vertex {b} must have a unique in-edge")
    (ell,) = (u for u, v in dag.edges if v == b)
    u1 = min(outs[p])
    return ((p, u1), (ell, b)), ((ell, u1), (p, b))


def outgoing_move(dag: Dag, b: int) -> Dag:
    """Hook outdegree-2 vertex b to its predecessor p = b-1.

    Deletes p's earlier out-edge (p, u1) and b's unique in-edge (l, b), and
    adds (l, u1) and (p, b).  On a tree-sorted graph the stretch [l, b] sits
    inside one tree, so every path count is unchanged.
    """
    _require_cubic(dag)
    return _replace_edges(dag, _outgoing_swap(dag, b))


def _incoming_swap(dag: Dag, v: int) -> Swap:
    in_adj = in_adjacency(dag)
    outs: dict[int, list[int]] = {}
    for a, b in dag.edges:
        outs.setdefault(a, []).append(b)
    for w in range(3, dag.vertex_count + 1):
        if len(outs.get(w, ())) == 2 and w not in outs.get(w - 1, ()):
            raise MoveError(f"outdegree-2 vertex {w} does not follow its predecessor yet")
    if v < 3 or v > dag.vertex_count:
        raise MoveError(f"vertex {v} has no movable predecessor")
    if len(in_adj[v]) != 2:
        raise MoveError(f"vertex {v} is not indegree-2")
    q = v - 1
    if q in in_adj[v]:
        raise MoveError(f"vertex {v} already follows {q}")
    l1, l2 = sorted(in_adj[v])
    if not l2 < q:
        raise MoveError(f"in-edges of {v} must come from before {q}")
    u = min(outs[q])
    return ((l2, v), (q, u)), ((l2, u), (q, v))


def incoming_move(dag: Dag, v: int) -> Dag:
    """Hook indegree-2 vertex v to its predecessor q = v-1.

    Requires every outdegree-2 vertex to already follow its predecessor.
    Deletes v's later in-edge (l2, v) and one out-edge (q, u), and adds
    (l2, u) and (q, v).  With parallel in-edges (l1 = l2) one copy goes.
    """
    _require_cubic(dag)
    return _replace_edges(dag, _incoming_swap(dag, v))


def hamiltonize(dag: Dag) -> tuple[Dag, MoveLog]:
    """Rewrite onto a Hamiltonian path, weakly increasing every path count.

    Tree-sorts once up front, then applies all outgoing moves in increasing
    vertex order followed by all incoming moves in increasing vertex order.
    The output is asserted to be on a Hamiltonian path with pointwise
    non-decreased counts relative to the tree-sorted input.
    """
    _require_cubic(dag)
    current = tree_sort(dag)
    base_mu = count_paths(current).mu
    log: list[Move] = []

    def apply(kind: str, focus: int, swap: Swap) -> None:
        nonlocal current
        before = count_paths(current).mu
        current = _replace_edges(current, swap)
        after = count_paths(current).mu
        log.append(Move(kind, focus, swap[0], swap[1], before, after))

    outdeg = [0] * (current.vertex_count + 1)
    for u, _ in current.edges:
        outdeg[u] += 1
    edgeset = set(current.edges)
    for b in range(3, current.vertex_count + 1):
        if outdeg[b] == 2 and (b - 1, b) not in edgeset:
            apply("outgoing", b, _outgoing_swap(current, b))

    indeg = [0] * (current.vertex_count + 1)
    for _, v in current.edges:
        indeg[v] += 1
    edgeset = set(current.edges)
    for v in range(3, current.vertex_count + 1):
        if indeg[v] == 2 and (v - 1, v) not in edgeset:
            apply("incoming", v, _incoming_swap(current, v))

    assert is_on_ham_path(current), "rewrite must end on a Hamiltonian path"
    final_mu = count_paths(current).mu
    assert all(a >= b for a, b in zip(final_mu, base_mu)), (
        "path counts decreased",
        base_mu,
        final_mu,
    )
    return current, tuple(log)
