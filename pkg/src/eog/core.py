"""Edge-ordered graphs: data model, isomorphism and structural predicates.

An edge-ordered graph is stored as a vertex count ``n`` and a tuple of
edges listed in increasing rank order, so the edge at position ``t`` has
rank ``t + 1``.  Vertices are ``0 .. n-1`` and may be isolated.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]
CanonicalKey = tuple


class InvalidGraphError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A search ran out of its node or time budget before deciding."""

    def __init__(self, message: str, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class EdgeOrderedGraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InvalidGraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_labels(cls, n: int, labels: Mapping[Edge, float]) -> "EdgeOrderedGraph":
        """Build from an injective real labeling; only the induced order is kept."""
        values = list(labels.values())
        if len(set(values)) != len(values):
            raise InvalidGraphError("edge labels must be distinct")
        return cls(n, tuple(e for e, _ in sorted(labels.items(), key=lambda kv: kv[1])))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def rank(self) -> dict[Edge, int]:
        """Map from each edge (both orientations) to its rank 1..m."""
        out = {}
        for t, (u, v) in enumerate(self.edges, 1):
            out[(u, v)] = t
            out[(v, u)] = t
        return out

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident ``(neighbor, rank)`` pairs in increasing rank."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for t, (u, v) in enumerate(self.edges, 1):
            adj[u].append((v, t))
            adj[v].append((u, t))
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.rank

    def relabel(self, perm: Sequence[int]) -> "EdgeOrderedGraph":
        """Apply the vertex map ``v -> perm[v]`` keeping the edge order."""
        return EdgeOrderedGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def subgraph(self, ranks: Iterable[int]) -> "EdgeOrderedGraph":
        """Spanning subgraph on the edges with the given ranks (induced order)."""
        keep = sorted(set(ranks))
        return EdgeOrderedGraph(self.n, tuple(self.edges[t - 1] for t in keep))

    def induced(self, vertices: Sequence[int]) -> "EdgeOrderedGraph":
        """Induced subgraph, vertices re-indexed in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        return EdgeOrderedGraph(
            len(index),
            tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def without_isolated(self) -> "EdgeOrderedGraph":
        touched = sorted({x for e in self.edges for x in e})
        return self.induced(touched)

    def __repr__(self):
        return f"EdgeOrderedGraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class SidedPattern:
    """An edge-ordered bipartite graph with left/right sides and optional root.

    ``side[v]`` is ``"L"`` or ``"R"``.  Hosts carry no root; rooted patterns
    are used for left-/right-containment.
    """

    graph: EdgeOrderedGraph
    side: tuple[str, ...]
    root: int | None = None

    def __post_init__(self):
        side = tuple(self.side)
        object.__setattr__(self, "side", side)
        if len(side) != self.graph.n or any(s not in ("L", "R") for s in side):
            raise InvalidGraphError("side must tag every vertex with 'L' or 'R'")
        for u, v in self.graph.edges:
            if side[u] == side[v]:
                raise InvalidGraphError(f"edge ({u}, {v}) does not cross the bipartition")
        if self.root is not None and not (0 <= self.root < self.graph.n):
            raise InvalidGraphError(f"root {self.root} out of range")

    def vertices_on(self, s: str) -> list[int]:
        return [v for v, t in enumerate(self.side) if t == s]


def _check_perm(perm: Sequence[int]) -> list[int]:
    perm = [int(x) for x in perm]
    if not perm or sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidGraphError(f"{perm!r} is not a permutation of 1..k")
    return perm


def _from_ranked(n: int, ranked: list[tuple[int, Edge]]) -> EdgeOrderedGraph:
    return EdgeOrderedGraph(n, tuple(e for _, e in sorted(ranked)))


def path_pattern(perm: Sequence[int]) -> EdgeOrderedGraph:
    """Path ``0-1-...-k`` whose i-th edge has rank ``perm[i]``.

    >>> path_pattern([1, 3, 2]).edges
    ((0, 1), (2, 3), (1, 2))
    """
    perm = _check_perm(perm)
    return _from_ranked(len(perm) + 1, [(r, (i, i + 1)) for i, r in enumerate(perm)])


def cycle_pattern(perm: Sequence[int]) -> EdgeOrderedGraph:
    perm = _check_perm(perm)
    k = len(perm)
    if k < 3:
        raise InvalidGraphError("a cycle needs at least 3 edges")
    return _from_ranked(k, [(r, (i, (i + 1) % k)) for i, r in enumerate(perm)])


def path_rooted(perm: Sequence[int]) -> SidedPattern:
    """The path pattern rooted at its starting vertex, sides alternating from L."""
    g = path_pattern(perm)
    return SidedPattern(g, tuple("LR"[i % 2] for i in range(g.n)), root=0)


def single_edge() -> EdgeOrderedGraph:
    return EdgeOrderedGraph(2, ((0, 1),))


# ---------------------------------------------------------------------------
# canonical form

def _canonical(g: EdgeOrderedGraph) -> tuple[tuple[Edge, ...], list[int]]:
    # Ranks are fixed by any isomorphism, so the lexicographically least edge
    # sequence labels vertices in order of first appearance.  The only freedom
    # is the order of the two endpoints of an edge whose endpoints are both new.
    best: list | None = None
    best_map: list[int] | None = None
    edges = g.edges
    m = len(edges)

    def rec(t: int, lab: dict[int, int], out: list[Edge], nxt: int):
        nonlocal best, best_map
        tight = False
        if best is not None:
            head = best[: len(out)]
            if out > head:
                return
            tight = out == head
        while t < m:
            u, v = edges[t]
            lu, lv = lab.get(u), lab.get(v)
            if lu is None and lv is None:
                for a, b in ((u, v), (v, u)):
                    lab2 = dict(lab)
                    lab2[a], lab2[b] = nxt, nxt + 1
                    rec(t + 1, lab2, out + [(nxt, nxt + 1)], nxt + 2)
                return
            if lu is None:
                lab[u] = lu = nxt
                nxt += 1
            elif lv is None:
                lab[v] = lv = nxt
                nxt += 1
            pair = (lu, lv) if lu < lv else (lv, lu)
            out.append(pair)
            if tight:
                b = best[len(out) - 1]
                if pair > b:
                    return
                tight = pair == b
            t += 1
        if best is None or out < best:
            best = list(out)
            best_map = _complete_map(g.n, lab)

    rec(0, {}, [], 0)
    return tuple(best), best_map


def _complete_map(n: int, lab: dict[int, int]) -> list[int]:
    perm = [0] * n
    nxt = len(lab)
    for v in range(n):
        if v in lab:
            perm[v] = lab[v]
        else:
            perm[v] = nxt
            nxt += 1
    return perm


def canonical_key(g: EdgeOrderedGraph) -> CanonicalKey:
    """Key equal for two graphs iff they are isomorphic as edge-ordered graphs.

    The key is ``(n, edges)`` minimized over all vertex permutations.
    """
    edges, _ = _canonical(g)
    return (g.n, edges)


def canonical_form(g: EdgeOrderedGraph) -> tuple[EdgeOrderedGraph, list[int]]:
    """Canonical representative and the vertex map ``g -> representative``."""
    edges, perm = _canonical(g)
    return EdgeOrderedGraph(g.n, edges), perm


def are_isomorphic(g: EdgeOrderedGraph, h: EdgeOrderedGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(len(a) for a in g.adjacency) != sorted(len(a) for a in h.adjacency):
        return False
    return canonical_key(g) == canonical_key(h)


def reverse_order(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    return EdgeOrderedGraph(g.n, tuple(reversed(g.edges)))


# ---------------------------------------------------------------------------
# structural predicates

def close_vertices(g: EdgeOrderedGraph) -> set[int]:
    """Vertices whose incident edge ranks form an interval (isolated included)."""
    out = set()
    for v, inc in enumerate(g.adjacency):
        if not inc or inc[-1][1] - inc[0][1] == len(inc) - 1:
            out.add(v)
    return out


def components(g: EdgeOrderedGraph) -> list[list[int]]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def is_star_forest(g: EdgeOrderedGraph) -> bool:
    """Non-empty graph whose non-trivial components are all stars."""
    if g.m == 0:
        return False
    for comp in components(g):
        if len(comp) < 2:
            continue
        ne = sum(1 for u, v in g.edges if u in comp)
        if ne != len(comp) - 1:
            return False
        if len(comp) > 2 and max(g.degree(v) for v in comp) != len(comp) - 1:
            return False
    return True


def has_cycle_length_ge4(g: EdgeOrderedGraph) -> bool:
    """True iff the underlying graph has a cycle of length at least four.

    A graph has no such cycle iff every biconnected block is a single edge
    or a triangle.
    """
    n = g.n
    adj = [[w for w, _ in a] for a in g.adjacency]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    stack: list[Edge] = []
    found = False

    def block_is_long(block: list[Edge]) -> bool:
        verts = {x for e in block for x in e}
        return len(block) > 1 and not (len(block) == 3 and len(verts) == 3)

    def dfs(u: int, parent: int):
        nonlocal timer, found
        disc[u] = low[u] = timer
        timer += 1
        for w in adj[u]:
            if found:
                return
            if disc[w] == -1:
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, w):
                            break
                    if block_is_long(block):
                        found = True
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for s in range(n):
        if disc[s] == -1 and not found:
            dfs(s, -1)
    return found


def bipartition(g: EdgeOrderedGraph) -> list[int] | None:
    """A proper 2-coloring (0/1 per vertex) or None if not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for w, _ in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color
