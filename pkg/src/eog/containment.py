"""Containment of edge-ordered patterns in edge-ordered hosts.

Two engines share the same backtracking shape.  The witness engine maps
pattern edges in increasing rank order, scanning host ranks upward, so the
first embedding found has the lexicographically least edge map.  The
decision engine maps edges in a connected order and confines each one to
the rank window left by its already-mapped neighbours in the order; it is
much faster at proving absence and is run first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import EdgeOrderedGraph, InvalidGraphError, SidedPattern


@dataclass(frozen=True)
class Embedding:
    vertex_map: dict[int, int]
    edge_map: tuple[int, ...]  # host rank of pattern edge t+1 at index t

    def check(self, host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> bool:
        """Validate the embedding independently of how it was found."""
        vm = self.vertex_map
        if len(set(vm.values())) != len(vm):
            return False
        if len(self.edge_map) != pattern.m:
            return False
        if any(a >= b for a, b in zip(self.edge_map, self.edge_map[1:])):
            return False
        for (a, b), r in zip(pattern.edges, self.edge_map):
            if host.rank.get((vm[a], vm[b])) != r:
                return False
        return True


def _search(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, allowed=None):
    """Witness search: the embedding with the lexicographically least edge map.

    ``allowed`` maps pattern vertex -> set of admissible host vertices.
    Pattern edges are placed in rank order and host ranks scanned upward.
    Once a rank has a vertex already mapped, the rank fixes the whole
    choice, so the first success is least.  An edge with two fresh endpoints
    can be placed in two orientations; both are completed and the smaller
    completion kept.
    """
    k = pattern.m
    m = host.m
    pedges = pattern.edges
    hadj = host.adjacency
    hedges = host.edges
    hrank = host.rank
    pdeg = [len(a) for a in pattern.adjacency]
    vmap = [-1] * pattern.n
    used = set()

    def ok_vertex(a: int, w: int) -> bool:
        if w in used or len(hadj[w]) < pdeg[a]:
            return False
        return allowed is None or a not in allowed or w in allowed[a]

    def rec(t: int, prev: int):
        """Least (ranks, vertex map) completing edges t.., or None."""
        if t == k:
            return (), tuple(vmap)
        a, b = pedges[t]
        ha, hb = vmap[a], vmap[b]
        hi = m - (k - t - 1)
        if ha >= 0 and hb >= 0:
            r = hrank.get((ha, hb))
            if r is not None and prev < r <= hi:
                sub = rec(t + 1, r)
                if sub is not None:
                    return (r,) + sub[0], sub[1]
            return None
        if ha >= 0 or hb >= 0:
            x, free = (ha, b) if ha >= 0 else (hb, a)
            for w, r in hadj[x]:
                if r <= prev:
                    continue
                if r > hi:
                    break
                if ok_vertex(free, w):
                    vmap[free] = w
                    used.add(w)
                    sub = rec(t + 1, r)
                    used.discard(w)
                    vmap[free] = -1
                    if sub is not None:
                        return (r,) + sub[0], sub[1]
            return None
        for r in range(prev + 1, hi + 1):
            x, y = hedges[r - 1]
            best = None
            for p, q in ((x, y), (y, x)):
                if ok_vertex(a, p) and ok_vertex(b, q):
                    vmap[a], vmap[b] = p, q
                    used.update((p, q))
                    sub = rec(t + 1, r)
                    used.difference_update((p, q))
                    vmap[a] = vmap[b] = -1
                    if sub is not None and (best is None or sub[0] < best[0]):
                        best = sub
            if best is not None:
                return (r,) + best[0], best[1]
        return None

    res = rec(0, 0)
    if res is None:
        return None
    ranks, vm = res
    return list(vm), list(ranks)


def _edge_order(pattern: EdgeOrderedGraph, start: int | None) -> list[int]:
    """Pattern edge indices in a connected-first order (start edge first)."""
    k = pattern.m
    pedges = pattern.edges
    deg = [len(a) for a in pattern.adjacency]
    if start is None:
        start = max(range(k), key=lambda t: (deg[pedges[t][0]] + deg[pedges[t][1]], -t))
    order = [start]
    seen = set(pedges[start])
    rest = set(range(k)) - {start}
    while rest:
        best, best_key = None, None
        for t in rest:
            a, b = pedges[t]
            touch = (a in seen) + (b in seen)
            key = (touch, deg[a] + deg[b], -t)
            if best_key is None or key > best_key:
                best, best_key = t, key
        order.append(best)
        rest.discard(best)
        seen.update(pedges[best])
    return order


def _search_fast(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, allowed=None,
                 pinned_last: int | None = None):
    """Decision-oriented backtracking in connected edge order.

    Each pattern edge is confined to the host-rank window left open by the
    already-mapped edges (leaving room for the pattern edges ranked between).
    """
    k = pattern.m
    m = host.m
    pedges = pattern.edges
    hadj = host.adjacency
    hedges = host.edges
    hrank = host.rank
    pdeg = [len(a) for a in pattern.adjacency]
    order = _edge_order(pattern, k - 1 if pinned_last is not None else None)
    vmap = [-1] * pattern.n
    used = set()
    emap = [0] * k
    top = m

    def ok_vertex(a: int, w: int) -> bool:
        if w in used or len(hadj[w]) < pdeg[a]:
            return False
        return allowed is None or a not in allowed or w in allowed[a]

    def window(t: int, depth: int) -> tuple[int, int]:
        lo = t + 1
        hi = top - (k - 1 - t)
        for i in range(depth):
            s = order[i]
            r = emap[s]
            if s < t:
                if r + (t - s) > lo:
                    lo = r + (t - s)
            elif r - (s - t) < hi:
                hi = r - (s - t)
        return lo, hi

    def rec(depth: int) -> bool:
        if depth == k:
            return True
        t = order[depth]
        a, b = pedges[t]
        lo, hi = window(t, depth)
        if lo > hi:
            return False
        ha, hb = vmap[a], vmap[b]
        if ha >= 0 and hb >= 0:
            r = hrank.get((ha, hb))
            if r is not None and lo <= r <= hi:
                emap[t] = r
                return rec(depth + 1)
            return False
        if ha >= 0 or hb >= 0:
            if ha >= 0:
                x, free = ha, b
            else:
                x, free = hb, a
            for w, r in hadj[x]:
                if r < lo:
                    continue
                if r > hi:
                    break
                if ok_vertex(free, w):
                    vmap[free] = w
                    used.add(w)
                    emap[t] = r
                    if rec(depth + 1):
                        return True
                    used.discard(w)
                    vmap[free] = -1
            return False
        for r in range(lo, hi + 1):
            x, y = hedges[r - 1]
            for p, q in ((x, y), (y, x)):
                if ok_vertex(a, p) and ok_vertex(b, q):
                    vmap[a], vmap[b] = p, q
                    used.add(p)
                    used.add(q)
                    emap[t] = r
                    if rec(depth + 1):
                        return True
                    used.discard(p)
                    used.discard(q)
                    vmap[a] = vmap[b] = -1
        return False

    if pinned_last is None:
        return (vmap, emap) if rec(0) else None
    a, b = pedges[k - 1]
    x, y = hedges[pinned_last - 1]
    top = pinned_last
    for p, q in ((x, y), (y, x)):
        if ok_vertex(a, p) and ok_vertex(b, q):
            vmap[a], vmap[b] = p, q
            used.update((p, q))
            emap[k - 1] = pinned_last
            if rec(1):
                return vmap, emap
            used.difference_update((p, q))
            vmap[a] = vmap[b] = -1
    return None


def _require_nonempty(pattern: EdgeOrderedGraph):
    if pattern.m == 0:
        raise InvalidGraphError("patterns must have at least one edge")


def _embedding(res, pattern: EdgeOrderedGraph) -> Embedding | None:
    if res is None:
        return None
    vmap, emap = res
    # isolated pattern vertices need distinct unused host vertices; handled by caller
    return Embedding({a: w for a, w in enumerate(vmap) if w >= 0}, tuple(emap))


def _place_isolated(host_n: int, vertex_map: dict[int, int], pattern: EdgeOrderedGraph):
    spare = [w for w in range(host_n) if w not in set(vertex_map.values())]
    missing = [a for a in range(pattern.n) if a not in vertex_map]
    if len(missing) > len(spare):
        return None
    vm = dict(vertex_map)
    vm.update(zip(missing, spare))
    return vm


def contains(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> Embedding | None:
    """A witness embedding of ``pattern`` into ``host``, or None if host avoids it."""
    _require_nonempty(pattern)
    if pattern.m > host.m or pattern.n > host.n:
        return None
    if _search_fast(host, pattern) is None:
        return None
    emb = _embedding(_search(host, pattern), pattern)
    if emb is None:
        return None
    vm = _place_isolated(host.n, emb.vertex_map, pattern)
    if vm is None:
        return None
    return Embedding(vm, emb.edge_map)


def _decide(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> bool:
    if pattern.m > host.m or pattern.n > host.n:
        return False
    res = _search_fast(host, pattern)
    if res is None:
        return False
    vm = {a: w for a, w in enumerate(res[0]) if w >= 0}
    return _place_isolated(host.n, vm, pattern) is not None


def avoids(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> bool:
    _require_nonempty(pattern)
    return not _decide(host, pattern)


def avoids_family(host: EdgeOrderedGraph, family: Iterable[EdgeOrderedGraph]) -> bool:
    family = list(family)
    for p in family:
        _require_nonempty(p)
    return not any(_decide(host, p) for p in family)


def copy_through_edge(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, rank: int) -> bool:
    """True iff some copy of ``pattern`` in ``host`` maps its top edge to ``rank``.

    Used by the incremental searches: when ``host`` minus its top edge avoids
    the pattern, this decides whether the whole host does.
    """
    _require_nonempty(pattern)
    if pattern.m > rank:
        return False
    res = _search_fast(host, pattern, pinned_last=rank)
    if res is None:
        return False
    vm = {a: w for a, w in enumerate(res[0]) if w >= 0}
    return _place_isolated(host.n, vm, pattern) is not None


def side_contains(host: SidedPattern, pattern: SidedPattern, mode: str) -> Embedding | None:
    """Rooted containment with the root landing on side ``mode`` ('left'/'right')."""
    if pattern.root is None:
        raise InvalidGraphError("side containment needs a rooted pattern")
    side = {"left": "L", "right": "R", "L": "L", "R": "R"}.get(mode)
    if side is None:
        raise ValueError(f"mode must be 'left' or 'right', got {mode!r}")
    g, p = host.graph, pattern.graph
    _require_nonempty(p)
    if p.m > g.m:
        return None
    targets = {w for w in range(g.n) if host.side[w] == side}
    allowed = {pattern.root: targets}
    if _search_fast(g, p, allowed=allowed) is None:
        return None
    res = _search(g, p, allowed=allowed)
    if res is None:
        return None
    emb = _embedding(res, p)
    vm = emb.vertex_map
    if pattern.root not in vm:
        spare = sorted(targets - set(vm.values()))
        if not spare:
            return None
        vm = dict(vm)
        vm[pattern.root] = spare[0]
    vm = _place_isolated(g.n, vm, p)
    if vm is None:
        return None
    return Embedding(vm, emb.edge_map)


def left_avoids(host: SidedPattern, pattern: SidedPattern) -> bool:
    return side_contains(host, pattern, "left") is None


def right_avoids(host: SidedPattern, pattern: SidedPattern) -> bool:
    return side_contains(host, pattern, "right") is None
