"""Exact desk-scale searches: lex(n, family), avoiding labelings, and ex(n, H).

``lex_exact`` grows avoiding graphs one edge at a time, each new edge taking
the new maximum rank.  Rank-prefixes of avoiding graphs avoid, so every
avoiding graph is reached.  The only containment test needed per step is
whether a copy uses the new top edge.

Bounding uses a simple monotonicity: once adding pair ``e`` on top would
create a copy, adding it on top of any extension still creates that copy.
So a state can never end with more than ``m + |addable pairs|`` edges.
"""
from __future__ import annotations

import os
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import networkx as nx

from .canonical import CLIQUE_KINDS, canonical_clique
from .containment import avoids_family, copy_through_edge
from .core import BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, canonical_key

DEFAULT_SECONDS = 60.0
DEFAULT_NODES = 10**8


def _default_seconds() -> float:
    env = os.environ.get("EOG_BUDGET_SECS")
    if env:
        try:
            return float(env)
        except ValueError:
            raise ValueError(f"EOG_BUDGET_SECS must be a number, got {env!r}") from None
    return DEFAULT_SECONDS


@dataclass
class Budget:
    seconds: float | None = None
    nodes: int = DEFAULT_NODES
    table_size: int = 2_000_000  # transposition table capacity (LRU)
    _start: float = field(default=0.0, repr=False)
    _used: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.seconds is None:
            self.seconds = _default_seconds()

    def start(self):
        self._start = time.monotonic()
        self._used = 0

    def tick(self) -> bool:
        """Count a node; False once either limit is hit."""
        self._used += 1
        if self._used > self.nodes:
            return False
        if self._used & 255 == 0 and time.monotonic() - self._start > self.seconds:
            return False
        return True

    @property
    def nodes_used(self) -> int:
        return self._used

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start


@dataclass(frozen=True)
class LexResult:
    value: int
    witness: EdgeOrderedGraph
    exact: bool  # False: value is only a certified lower bound
    nodes: int = 0
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "exact" if self.exact else "budget_exceeded"


class _LRUSet:
    def __init__(self, capacity: int):
        self.capacity = capacity
        self._d: OrderedDict = OrderedDict()

    def seen(self, key) -> bool:
        """Record ``key``; report whether it was already present."""
        if key in self._d:
            self._d.move_to_end(key)
            return True
        self._d[key] = None
        if len(self._d) > self.capacity:
            self._d.popitem(last=False)
        return False


def _family(family) -> list[EdgeOrderedGraph]:
    if isinstance(family, EdgeOrderedGraph):
        family = [family]
    family = list(family)
    if not family:
        raise InvalidGraphError("family must be non-empty")
    if any(h.m == 0 for h in family):
        raise InvalidGraphError("family members must have at least one edge")
    return family


def _blocked(edges: tuple, pair, n: int, family) -> bool:
    g = EdgeOrderedGraph(n, edges + (pair,))
    return any(copy_through_edge(g, h, g.m) for h in family)


def _candidate_pairs(n: int, edges: tuple, pool) -> list:
    """Pairs from ``pool`` with isolated-vertex symmetry removed.

    Isolated vertices are interchangeable, so only the two smallest of them
    are ever used as fresh endpoints.
    """
    touched = {x for e in edges for x in e}
    iso = [v for v in range(n) if v not in touched][:2]
    allowed = touched | set(iso)
    return [p for p in pool if p[0] in allowed and p[1] in allowed
            and (p[0] in touched or p[1] in touched or (p[0], p[1]) == tuple(iso[:2]))]


def lex_exact(n: int, family, budget: Budget | None = None,
              upper_bound: int | None = None) -> LexResult:
    """Exact lex(n, family) with a witness, or a lower bound when the budget runs out.

    ``upper_bound`` (if known) lets the search stop as soon as it is met.
    """
    family = _family(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    budget = budget or Budget()
    budget.start()
    full = comb(n, 2)
    if n < 2:
        return LexResult(0, EdgeOrderedGraph(n), True)
    # a canonical clique that avoids everything settles the value at once
    for kind in CLIQUE_KINDS:
        k = canonical_clique(n, kind)
        if avoids_family(k, family):
            return LexResult(full, k, True, 0, budget.elapsed)
    ub = full if upper_bound is None else min(full, upper_bound)

    all_pairs = list(combinations(range(n), 2))
    start_ok = [p for p in all_pairs if not _blocked((), p, n, family)]
    best_edges: tuple = ()
    table = _LRUSet(budget.table_size)
    out_of_budget = False

    def rec(edges: tuple, addable: list):
        nonlocal best_edges, out_of_budget
        if len(edges) > len(best_edges):
            best_edges = edges
        if len(best_edges) >= ub or out_of_budget:
            return
        if len(edges) + len(addable) <= len(best_edges):
            return
        if not budget.tick():
            out_of_budget = True
            return
        for pair in _candidate_pairs(n, edges, addable):
            child = edges + (pair,)
            if table.seen(canonical_key(EdgeOrderedGraph(n, child))):
                continue
            rest = [p for p in addable if p != pair and not _blocked(child, p, n, family)]
            rec(child, rest)
            if len(best_edges) >= ub or out_of_budget:
                return

    rec((), start_ok)
    witness = EdgeOrderedGraph(n, best_edges)
    return LexResult(len(best_edges), witness, not out_of_budget, budget.nodes_used, budget.elapsed)


def lex_value(n: int, family, budget: Budget | None = None) -> int:
    """Like ``lex_exact`` but returns only the value and raises on budget exhaustion."""
    res = lex_exact(n, family, budget)
    if not res.exact:
        raise BudgetExceeded(f"lex({n}) search ran out of budget", lower_bound=res.value)
    return res.value


def lex_sequence(nmax: int, family, budget: Budget | None = None) -> list[LexResult]:
    """lex(n) for n = 0..nmax, feeding each value into the next upper bound.

    Deleting a vertex from an extremal n-vertex graph and averaging gives
    lex(n) <= lex(n-1) * n / (n-2).
    """
    out: list[LexResult] = []
    for n in range(nmax + 1):
        ub = None
        if n >= 3 and out and out[-1].exact:
            ub = out[-1].value * n // (n - 2)
        out.append(lex_exact(n, family, budget, upper_bound=ub))
    return out


def _automorphisms(g: EdgeOrderedGraph) -> list[dict]:
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    simple.add_edges_from(g.edges)
    return list(nx.algorithms.isomorphism.GraphMatcher(simple, simple).isomorphisms_iter())


def can_avoid(g: EdgeOrderedGraph, family, max_edges: int = 16,
              budget: Budget | None = None) -> EdgeOrderedGraph | None:
    """A labeling of g's edges avoiding the family, or None if none exists.

    Edges are placed in increasing rank.  A remaining edge that can no
    longer go on top stays blocked forever, so such a prefix is dead.
    Prefixes equal up to an automorphism of g are explored once.
    """
    family = _family(family)
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the guard of {max_edges}")
    budget = budget or Budget()
    budget.start()
    edges = [tuple(sorted(e)) for e in g.edges]
    autos = _automorphisms(g)
    seen = set()

    def orbit_key(prefix: tuple) -> tuple:
        return min(tuple(tuple(sorted((a[u], a[v]))) for u, v in prefix) for a in autos)

    def rec(prefix: tuple, rest: list):
        if not rest:
            return prefix
        if not budget.tick():
            raise BudgetExceeded("can_avoid search ran out of budget")
        ok = [e for e in rest if not _blocked(prefix, e, g.n, family)]
        if len(ok) < len(rest):
            return None
        for e in ok:
            child = prefix + (e,)
            key = orbit_key(child)
            if key in seen:
                continue
            seen.add(key)
            found = rec(child, [f for f in rest if f != e])
            if found is not None:
                return found
        return None

    found = rec((), edges)
    return None if found is None else EdgeOrderedGraph(g.n, found)


def _as_nx(h) -> nx.Graph:
    if isinstance(h, nx.Graph):
        return h
    simple = nx.Graph()
    simple.add_nodes_from(range(h.n))
    simple.add_edges_from(h.edges)
    return simple


def ex_exact(n: int, h) -> int:
    """Classical Turan number by scanning every graph on n <= 7 vertices."""
    h = _as_nx(h)
    if h.number_of_edges() == 0:
        raise InvalidGraphError("forbidden graph must have an edge")
    if n > 7:
        raise BudgetExceeded("the graph atlas only covers n <= 7")
    if h.number_of_nodes() > n:
        return comb(n, 2)
    best = 0
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n or g.number_of_edges() <= best:
            continue
        if not nx.algorithms.isomorphism.GraphMatcher(g, h).subgraph_is_monomorphic():
            best = g.number_of_edges()
    return best


def enumerate_patterns(max_edges: int) -> list[EdgeOrderedGraph]:
    """Every edge-ordered graph with 1..max_edges edges and no isolated vertex, up to isomorphism.

    Dropping the top edge (and any vertex it leaves isolated) gives a smaller
    pattern, so extending each class by a new top edge in every way reaches
    all classes.
    """
    level = {canonical_key(EdgeOrderedGraph(2, ((0, 1),))): EdgeOrderedGraph(2, ((0, 1),))}
    out = list(level.values())
    for _ in range(max_edges - 1):
        nxt: dict = {}
        for g in level.values():
            n = g.n
            for u in range(n + 2):
                for v in range(u + 1, n + 2):
                    if v >= n + 1 and u != n:
                        continue  # fresh vertices are n (and n+1 only paired with n)
                    if v < n and g.has_edge(u, v):
                        continue
                    size = max(n, v + 1)
                    h = EdgeOrderedGraph(size, g.edges + ((u, v),))
                    nxt.setdefault(canonical_key(h), h)
        level = nxt
        out.extend(level.values())
    return out
