"""Decision procedures for the order chromatic number of finite families.

For a finite family with at most ``v`` vertices per member:

* the order chromatic number is infinite iff one of the four canonical
  labelings of K_v avoids the family;
* it exceeds ``k`` iff some canonical edge-order of K_{k x v} avoids it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import networkx as nx

from .canonical import CLIQUE_KINDS, CanonicalSpec, canonical_clique, enumerate_specs, knn_can, realize
from .containment import avoids_family, contains
from .core import (BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, bipartition,
                   canonical_key, close_vertices, components)


@dataclass(frozen=True)
class ChiResult:
    kind: str  # "exactly", "exceeds_budget" or "infinite"
    value: int | None = None

    @classmethod
    def exactly(cls, k: int) -> "ChiResult":
        return cls("exactly", k)

    @classmethod
    def exceeds_budget(cls, kmax: int) -> "ChiResult":
        return cls("exceeds_budget", kmax)

    @classmethod
    def infinite(cls) -> "ChiResult":
        return cls("infinite")

    def __str__(self):
        if self.kind == "exactly":
            return f"Exactly({self.value})"
        if self.kind == "exceeds_budget":
            return f"ExceedsBudget({self.value})"
        return "Infinite"


def _family(family) -> list[EdgeOrderedGraph]:
    if isinstance(family, EdgeOrderedGraph):
        family = [family]
    family = list(family)
    if not family:
        raise InvalidGraphError("family must be non-empty")
    for h in family:
        if h.m == 0:
            raise InvalidGraphError("family members must have at least one edge")
    return family


def is_chi_two(h: EdgeOrderedGraph) -> bool:
    if h.m == 0:
        raise InvalidGraphError("pattern must have at least one edge")
    return contains(knn_can(h.n).graph, h) is not None


def avoiding_cliques(family, n: int | None = None) -> list[str]:
    """The canonical clique kinds of K_n (default: max member size) avoiding the family."""
    family = _family(family)
    v = n if n is not None else max(h.n for h in family)
    return [kind for kind in CLIQUE_KINDS if avoids_family(canonical_clique(v, kind), family)]


def is_chi_infinite(family) -> bool:
    return bool(avoiding_cliques(family))


def _class_size(family: list[EdgeOrderedGraph], k: int) -> int:
    v = max(h.n for h in family)
    return max(v, 3) if k >= 3 else max(v, 2)


@lru_cache(maxsize=16)
def _canonical_hosts(k: int, n: int, max_candidates: int) -> tuple[tuple[CanonicalSpec, EdgeOrderedGraph], ...]:
    """One (spec, host) per isomorphism class, first spec in enumeration order.

    Containment only depends on the isomorphism class, and the classes are
    far fewer than the specs (80 against 3840 for three classes).
    """
    seen = {}
    for s in enumerate_specs(k, n, max_candidates):
        g = realize(s)
        seen.setdefault(canonical_key(g), (s, g))
    return tuple(seen.values())


def find_avoiding_canonical(family, k: int, n: int | None = None,
                            max_candidates: int = 2_000_000) -> CanonicalSpec | None:
    """A canonical edge-order of K_{k x n} avoiding the family, or None.

    Raises ``BudgetExceeded`` when the spec space is too large to enumerate.
    """
    family = _family(family)
    if k < 2:
        raise ValueError("k must be at least 2")
    n = n if n is not None else _class_size(family, k)
    for spec, host in _canonical_hosts(k, n, max_candidates):
        if avoids_family(host, family):
            return spec
    return None


def chi_exceeds(family, k: int, max_candidates: int = 2_000_000) -> bool:
    return find_avoiding_canonical(family, k, max_candidates=max_candidates) is not None


def order_chromatic(family, kmax: int, max_candidates: int = 2_000_000) -> ChiResult:
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    family = _family(family)
    if is_chi_infinite(family):
        return ChiResult.infinite()
    for k in range(2, kmax + 1):
        try:
            if not chi_exceeds(family, k, max_candidates):
                return ChiResult.exactly(k)
        except BudgetExceeded:
            return ChiResult.exceeds_budget(k - 1)
    return ChiResult.exceeds_budget(kmax)


def has_close_class_2coloring(h: EdgeOrderedGraph) -> bool:
    """A proper 2-coloring exists with every vertex of one class close."""
    color = bipartition(h)
    if color is None:
        return False
    close = close_vertices(h)
    for comp in components(h):
        sides = [[v for v in comp if color[v] == c] for c in (0, 1)]
        if not any(all(v in close for v in side) for side in sides):
            return False
    return True


def _require_complete(k: EdgeOrderedGraph):
    if k.m != k.n * (k.n - 1) // 2:
        raise InvalidGraphError("expected an edge-ordering of a complete graph")


def auxiliary_graph(k: EdgeOrderedGraph, x: int) -> nx.Graph:
    """G_x: on V - {x}, yz is an edge iff rank(yz) lies strictly between rank(xy) and rank(xz)."""
    _require_complete(k)
    r = k.rank
    g = nx.Graph()
    g.add_nodes_from(v for v in range(k.n) if v != x)
    for y, z in k.edges:
        if x in (y, z):
            continue
        lo, hi = sorted((r[(x, y)], r[(x, z)]))
        if lo < r[(y, z)] < hi:
            g.add_edge(y, z)
    return g


def dialemma_check(k: EdgeOrderedGraph, n: int) -> bool:
    """K avoids D_n and every auxiliary graph G_x is bipartite."""
    from .constructions import d_graph

    _require_complete(k)
    if n < 2:
        raise ValueError("n must be at least 2")
    if contains(k, d_graph(n)) is not None:
        return False
    return all(nx.is_bipartite(auxiliary_graph(k, x)) for x in range(k.n))


@dataclass
class LabelingScan:
    classes: list[tuple[EdgeOrderedGraph, ChiResult]]

    def _values(self):
        return [c for _, c in self.classes]

    @property
    def chi_minus(self) -> ChiResult:
        return min(self._values(), key=_chi_sort_key)

    @property
    def chi_plus(self) -> ChiResult:
        return max(self._values(), key=_chi_sort_key)


def _chi_sort_key(c: ChiResult):
    if c.kind == "exactly":
        return (0, c.value)
    if c.kind == "exceeds_budget":
        return (1, c.value)
    return (2, 0)


def labelings_up_to_iso(g: EdgeOrderedGraph, max_edges: int = 8) -> list[EdgeOrderedGraph]:
    """One representative per isomorphism class of edge-orderings of g's edges."""
    if g.m > max_edges:
        raise BudgetExceeded(f"{g.m}! orderings exceed the guard ({max_edges} edges)")
    seen = {}
    for order in permutations(g.edges):
        h = EdgeOrderedGraph(g.n, order)
        seen.setdefault(canonical_key(h), h)
    return list(seen.values())


def labeling_scan(g: EdgeOrderedGraph, kmax: int, max_edges: int = 8) -> LabelingScan:
    return LabelingScan([(h, order_chromatic([h], kmax)) for h in labelings_up_to_iso(g, max_edges)])
