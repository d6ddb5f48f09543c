"""Pruned exhaustive search for extremal path counts over arc tuples.

The tuple space for length n is finite (entry i ranges over [i, n]), so
maxima per connectivity class come from direct enumeration.  Two optional
prunes discard provably suboptimal tuples:

* ``double-label``: two arcs before position i share the value i; lowering
  one of them to i-1 strictly increases the total.  The prune fires only
  when the lowered tuple still lies in the searched class, which keeps it
  sound for the 3-edge-connected and simple classes (where the unrestricted
  rule would discard genuine maximizers, the wedge family among them).
* ``kind-run``: the decoded graph has three consecutive vertices of one
  kind; such graphs are dominated via the double-label argument and
  reversal.

Enumeration order is lexicographic and the whole module is deterministic;
results are reproducible bit-for-bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dag import Dag, count_paths, is_simple, vertex_kinds
from .tuples import (
    ArcTuple,
    TupleClass,
    decode,
    is_canonical,
    is_valid,
    tuple_mu,
)

PRUNE_DOUBLE_LABEL = "double-label"
PRUNE_KIND_RUN = "kind-run"
ALL_PRUNES = frozenset((PRUNE_DOUBLE_LABEL, PRUNE_KIND_RUN))

SQRT3 = math.sqrt(3.0)


class BudgetExceeded(RuntimeError):
    pass


class Budget:
    """Node counter with a hard ceiling; None means unlimited."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"enumeration budget {self.limit} exhausted")


def fibonacci(n: int) -> int:
    """F(1) = F(2) = 1."""
    if n < 1:
        raise ValueError("fibonacci index starts at 1")
    a, b = 1, 1
    for _ in range(n - 2):
        a, b = b, a + b
    return b


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: tuple length, class, connectivity, filters."""

    n: int
    klass: TupleClass = TupleClass.BOUNDARY
    connectivity: int = 1
    simple_only: bool = False
    prunes: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "prunes", frozenset(self.prunes))
        unknown = self.prunes - ALL_PRUNES
        if unknown:
            raise ValueError(f"unknown prunes: {sorted(unknown)}")
        if self.connectivity not in (1, 2, 3):
            raise ValueError("connectivity must be 1, 2 or 3")


@dataclass(frozen=True)
class ClosedForm:
    name: str
    value: float
    exact_value: int | None  # integer value when the formula is integral at n
    claim: str               # "theorem" or "conjecture"
    tight_claimed: bool
    equal: bool | None       # search max == exact_value (None if not comparable)
    exceeded: bool           # search max exceeds the claimed bound


@dataclass(frozen=True)
class ExtremalReport:
    spec: SearchSpec
    max_total: int | None
    witnesses: tuple[tuple[int, ...], ...]
    complete: bool
    nodes: int
    closed_form: ClosedForm | None = None
    counterexamples: tuple[tuple[int, ...], ...] = ()


def double_label_prunable(t: ArcTuple) -> bool:
    """Two arcs with positions < i share the value i, for some i."""
    vals = t.values
    n = len(vals)
    for i in range(2, n + 1):
        early = 0
        for j in range(1, min(i - 1, n) + 1):
            if vals[j - 1] == i:
                early += 1
                if early >= 2:
                    return True
    return False


def kind_run_prunable(t: ArcTuple) -> bool:
    """The decoded graph has three consecutive equal vertex kinds."""
    kinds = vertex_kinds(decode(t))
    return any(kinds[i] == kinds[i + 1] == kinds[i + 2] for i in range(len(kinds) - 2))


def _in_search_class(t: ArcTuple, spec: SearchSpec) -> bool:
    if not is_valid(t, spec.connectivity):
        return False
    if spec.simple_only and not is_simple(decode(t)):
        return False
    return True


def _double_label_prunable_for(t: ArcTuple, spec: SearchSpec) -> bool:
    """Prune t only if lowering one doubled label stays inside the class.

    Any in-class lowering strictly increases the total, so t cannot be a
    maximizer.  Checking class membership of the replacement keeps the rule
    sound for connectivity-3 and simple searches.
    """
    vals = t.values
    n = len(vals)
    for i in range(2, n + 1):
        early = [j for j in range(1, i) if vals[j - 1] == i]
        if len(early) < 2:
            continue
        for j1 in early:
            repl = list(vals)
            repl[j1 - 1] = i - 1
            if _in_search_class(ArcTuple(tuple(repl), t.klass), spec):
                return True
    return False


def enumerate_tuples(spec: SearchSpec, budget: Budget | None = None):
    """Yield, in lexicographic order, the valid tuples the spec admits.

    Merged tuples are enumerated in canonical form only (first entry at
    least the second); the twin tuple decodes to the identical graph.
    """
    n = spec.n
    merged = spec.klass is TupleClass.MERGED
    values = [0] * n

    def rec(i: int):
        if budget is not None:
            budget.spend()
        if i == n:
            t = ArcTuple(tuple(values), spec.klass)
            if merged and not is_canonical(t):
                return
            if not _in_search_class(t, spec):
                return
            if PRUNE_DOUBLE_LABEL in spec.prunes and _double_label_prunable_for(t, spec):
                return
            if PRUNE_KIND_RUN in spec.prunes and kind_run_prunable(t):
                return
            yield t
            return
        lo = max(i + 1, 2) if merged and i == 0 else i + 1
        hi = n
        for v in range(lo, hi + 1):
            values[i] = v
            yield from rec(i + 1)

    if n >= 1:
        yield from rec(0)


def find_extremal(spec: SearchSpec, budget_limit: int | None = None) -> ExtremalReport:
    """Maximum total over the spec's tuples, with every witness attaining it."""
    budget = Budget(budget_limit)
    best: int | None = None
    witnesses: list[tuple[int, ...]] = []
    complete = True
    try:
        for t in enumerate_tuples(spec, budget):
            total = tuple_mu(t).total
            if best is None or total > best:
                best = total
                witnesses = [t.values]
            elif total == best:
                witnesses.append(t.values)
    except BudgetExceeded:
        complete = False
    return ExtremalReport(
        spec=spec,
        max_total=best,
        witnesses=tuple(witnesses),
        complete=complete,
        nodes=budget.used,
    )


CONJECTURES = ("conn", "2ec", "fibonacci", "simple-conn", "simple-2ec")


def _closed_form(name: str, n: int) -> tuple[float, int | None, str, bool]:
    """(value, integer value or None, claim kind, tightness claimed at n)."""
    if name == "conn":
        v = 9 * 2 ** (n - 3) if n >= 3 else 9.0 * 2.0 ** (n - 3)
        return float(v), (v if n >= 3 else None), "theorem", n >= 3
    if name == "2ec":
        v = 2**n + 1
        return float(v), v, "theorem", n >= 1
    if name == "fibonacci":
        v = fibonacci(n + 2) + 1
        return float(v), v, "conjecture", True
    if name == "simple-conn":
        value = 16.0 * SQRT3 ** (n - 5)
        exact = 16 * 3 ** ((n - 5) // 2) if (n - 5) % 2 == 0 and n >= 5 else None
        return value, exact, "conjecture", n >= 5 and n % 2 == 1
    if name == "simple-2ec":
        value = SQRT3**n + 1
        exact = 3 ** (n // 2) + 1 if n % 2 == 0 else None
        return value, exact, "conjecture", n >= 2 and n % 2 == 0
    raise ValueError(f"unknown conjecture {name!r}")


def conjecture_spec(name: str, n: int, prunes: frozenset[str] = frozenset()) -> SearchSpec:
    """Search spec matching a closed-form row, for a graph on 2n vertices."""
    if name not in CONJECTURES:
        raise ValueError(f"unknown conjecture {name!r}")
    connectivity = {"conn": 1, "2ec": 2, "fibonacci": 3, "simple-conn": 1, "simple-2ec": 2}[name]
    simple = name.startswith("simple")
    return SearchSpec(
        n=n + 1,
        klass=TupleClass.MERGED,
        connectivity=connectivity,
        simple_only=simple,
        prunes=prunes,
    )


def check_conjecture(
    name: str,
    n: int,
    budget_limit: int | None = None,
    prunes: frozenset[str] = frozenset(),
) -> ExtremalReport:
    """Search the matching class on 2n vertices and compare the closed form.

    A conjectured bound that the search beats is reported as a
    counterexample record, never as a failure: that outcome would be a
    finding about the bound, not a bug in the search.
    """
    spec = conjecture_spec(name, n, prunes)
    report = find_extremal(spec, budget_limit)
    value, exact, claim, tight = _closed_form(name, n)
    equal = None
    exceeded = False
    if report.max_total is not None:
        exceeded = report.max_total > value + 1e-9
        if exact is not None and tight:
            equal = report.max_total == exact
    cf = ClosedForm(name, value, exact, claim, tight, equal, exceeded)
    counterexamples = report.witnesses if exceeded else ()
    return ExtremalReport(
        spec=spec,
        max_total=report.max_total,
        witnesses=report.witnesses,
        complete=report.complete,
        nodes=report.nodes,
        closed_form=cf,
        counterexamples=counterexamples,
    )


FAMILIES = ("wedge", "conn", "2ec", "simple-conn", "simple-2ec")


def family_tuple(name: str, n: int) -> ArcTuple:
    """The extremal family member for a graph on 2n vertices (merged class)."""
    m = n + 1
    if name == "wedge":
        # uniform short jumps plus one long source arc; attains F(n+2)+1
        if n < 2:
            raise ValueError("wedge family needs n >= 2")
        vals = (m,) + tuple(j + 1 for j in range(2, n + 1)) + (m,)
    elif name == "conn":
        if n < 3:
            raise ValueError("connected family needs n >= 3")
        vals = (2, 2) + tuple(range(3, n)) + (m, m)
    elif name == "2ec":
        if n < 1:
            raise ValueError("2-edge-connected family needs n >= 1")
        vals = (m,) + tuple(range(2, n + 1)) + (m,)
    elif name == "simple-conn":
        if n < 5 or n % 2 == 0:
            raise ValueError("simple connected family needs odd n >= 5")
        middle = []
        for v in range(5, n):
            if v % 2 == 1:
                middle += [v, v]
        vals = (3, 3, 3) + tuple(middle) + (m, m, m)
    elif name == "simple-2ec":
        if n < 2 or n % 2 == 1:
            raise ValueError("simple 2-edge-connected family needs even n >= 2")
        middle = []
        for v in range(3, n):
            if v % 2 == 1:
                middle += [v, v]
        vals = (m,) + tuple(middle) + (m, m)
    else:
        raise ValueError(f"unknown family {name!r}")
    t = ArcTuple(vals, TupleClass.MERGED)
    assert len(t) == m, (name, n, vals)
    return t


def reversed_tuple(t: ArcTuple) -> ArcTuple:
    """Tuple of the reversed graph (same total by the path bijection)."""
    from .dag import reverse
    from .tuples import encode

    return encode(reverse(decode(t)))
