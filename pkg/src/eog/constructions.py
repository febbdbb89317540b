"""Explicit extremal constructions, each with a deterministic edge order.

Wherever a choice is left free (matchings, order inside a matching, ties)
it is pinned so the output is reproducible byte for byte.
"""
from __future__ import annotations

from math import ceil

from .canonical import canonical_clique, realize
from .containment import Embedding, avoids_family
from .core import EdgeOrderedGraph, SidedPattern


def star_plus_matching(n: int) -> EdgeOrderedGraph:
    """Star at vertex 0 (smallest ranks) plus a matching on consecutive leaves."""
    if n < 1:
        raise ValueError("n must be positive")
    star = [(0, i) for i in range(1, n)]
    matching = [(i, i + 1) for i in range(1, n - 1, 2)]
    return EdgeOrderedGraph(n, tuple(star + matching))


# K_4 labeling whose two smallest and two largest edges are independent pairs
_K4_NO_MONOTONE = ((0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2))


def disjoint_k4(c: int) -> EdgeOrderedGraph:
    if c < 1:
        raise ValueError("c must be positive")
    edges = [(4 * i + u, 4 * i + v) for i in range(c) for u, v in _K4_NO_MONOTONE]
    return EdgeOrderedGraph(4 * c, tuple(edges))


def _doubling(i: int, middle_matching: bool) -> EdgeOrderedGraph:
    g = EdgeOrderedGraph(1)
    for _ in range(i):
        h = g.n
        small = list(g.edges)
        large = [(u + h, v + h) for u, v in g.edges]
        matching = [(j, j + h) for j in range(h)]
        if middle_matching:
            order = small + matching + large
        else:
            order = small + large + matching
        g = EdgeOrderedGraph(2 * h, tuple(order))
    return g


def recursive_g(i: int) -> EdgeOrderedGraph:
    """Two copies of the previous graph, the matching between them on top."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return _doubling(i, middle_matching=False)


def recursive_g_prime(i: int) -> EdgeOrderedGraph:
    """Two copies of the previous graph with the matching ranked between them."""
    if i < 0:
        raise ValueError("i must be non-negative")
    return _doubling(i, middle_matching=True)


def rightright(i: int) -> SidedPattern:
    """Bipartite doubling: matching from left of copy 1 to right of copy 2, ranked between."""
    if i < 1:
        raise ValueError("i must be at least 1")
    g = EdgeOrderedGraph(2, ((0, 1),))
    side = ["L", "R"]
    for _ in range(i - 1):
        h = g.n
        lefts = [v for v in range(h) if side[v] == "L"]
        rights = [v + h for v in range(h) if side[v] == "R"]
        first = list(g.edges)
        second = [(u + h, v + h) for u, v in g.edges]
        matching = list(zip(lefts, rights))
        g = EdgeOrderedGraph(2 * h, tuple(first + matching + second))
        side = side + side
    return SidedPattern(g, tuple(side))


def d_graph(n: int) -> EdgeOrderedGraph:
    """D_n on x_1..x_n -> 0..n-1: x1x2 < ... < x1xn < x2xn < ... < x_{n-1}xn."""
    if n < 2:
        raise ValueError("n must be at least 2")
    first = [(0, j) for j in range(1, n)]
    second = [(j, n - 1) for j in range(1, n - 1)]
    return EdgeOrderedGraph(n, tuple(first + second))


K9_MATRIX = (
    (None, 1, 2, 3, 4, 33, 34, 35, 36),
    (1, None, 26, 25, 29, 30, 5, 27, 8),
    (2, 26, None, 24, 15, 7, 20, 18, 17),
    (3, 25, 24, None, 11, 31, 22, 23, 9),
    (4, 29, 15, 11, None, 10, 12, 13, 16),
    (33, 30, 7, 31, 10, None, 32, 28, 6),
    (34, 5, 20, 22, 12, 32, None, 21, 14),
    (35, 27, 18, 23, 13, 28, 21, None, 19),
    (36, 8, 17, 9, 16, 6, 14, 19, None),
)


def k9_labeling() -> EdgeOrderedGraph:
    labels = {}
    for i in range(9):
        for j in range(i + 1, 9):
            if K9_MATRIX[i][j] != K9_MATRIX[j][i]:
                raise AssertionError(f"K9 matrix not symmetric at ({i}, {j})")
            labels[(i, j)] = K9_MATRIX[i][j]
    return EdgeOrderedGraph.from_labels(9, labels)


def explower_order(n: int) -> EdgeOrderedGraph:
    """K on binary strings of length n-2 (as integers): order by common-prefix
    length, then by |x - y|, then by the endpoint pair."""
    if n < 2:
        raise ValueError("n must be at least 2")
    bits = n - 2
    size = 1 << bits

    def lcp(x, y):
        return bits - (x ^ y).bit_length()

    pairs = [(x, y) for x in range(size) for y in range(x + 1, size)]
    pairs.sort(key=lambda e: (lcp(*e), e[1] - e[0], e))
    return EdgeOrderedGraph(size, tuple(pairs))


def embed_d_canonical(n: int, kind: str) -> Embedding:
    """Explicit embedding of D_n into canonical_clique(n, kind).

    Position ``p`` of the clique (vertex v_{p+1}) receives the D_n vertex
    listed ``p``-th: natural order for min/max, x_1, x_n, ..., x_2 for the
    inverse min-labeling and x_{n-1}, ..., x_1, x_n for the inverse max.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if kind in ("min", "max"):
        seq = list(range(n))
    elif kind == "inv_min":
        seq = [0] + list(range(n - 1, 0, -1))
    elif kind == "inv_max":
        seq = list(range(n - 2, -1, -1)) + [n - 1]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    vertex_map = {x: p for p, x in enumerate(seq)}
    host = canonical_clique(n, kind)
    pattern = d_graph(n)
    emb = Embedding(vertex_map, tuple(host.rank[(vertex_map[a], vertex_map[b])] for a, b in pattern.edges))
    if not emb.check(host, pattern):
        raise AssertionError(f"stated vertex order does not embed D_{n} into the {kind}-labeling")
    return emb


class NoAvoidingOrder(ValueError):
    pass


def turan_witness(n: int, r: int, family, spec=None) -> EdgeOrderedGraph:
    """A labeling of the Turan graph T(n, r) avoiding the family.

    The labeling is the restriction of an avoiding canonical edge-order of
    K_{r x s}; classes keep sizes floor/ceil(n/r).
    """
    from .orderchrom import _class_size, _family, find_avoiding_canonical

    family = _family(family)
    if n < 1 or r < 2:
        raise ValueError("need n >= 1 and r >= 2")
    s = max(ceil(n / r), 1)
    if spec is None:
        spec = find_avoiding_canonical(family, r)
        if spec is None:
            raise NoAvoidingOrder(f"no canonical order of K_{{{r} x v}} avoids the family; "
                                  f"its order chromatic number is at most {r}")
    big = realize(spec.with_n(max(s, _class_size(family, r))))
    size = big.n // r
    sizes = [n // r + (1 if c < n % r else 0) for c in range(r)]
    keep = [c * size + j for c in range(r) for j in range(sizes[c])]
    witness = big.induced(keep)
    if not avoids_family(witness, family):
        raise AssertionError("restricted canonical order unexpectedly contains the family")
    return witness



def has_doubling_split(h: EdgeOrderedGraph, middle_matching: bool = False) -> bool:
    """Can V(h) split into non-empty A, B the way a doubling step splits a copy?

    The A-B edges must form a matching.  Without ``middle_matching`` they
    must outrank every other edge and A's edges must precede B's; with it
    they must sit above every edge inside A and below every edge inside B.
    Graphs with no such split cannot appear in ``recursive_g`` (resp.
    ``recursive_g_prime``, for connected graphs).
    """
    n = h.n
    for mask in range(1, (1 << n) - 1):
        ranks = {"A": [], "B": [], "X": []}
        cross_ends = []
        for t, (u, v) in enumerate(h.edges):
            su, sv = mask >> u & 1, mask >> v & 1
            if su != sv:
                ranks["X"].append(t)
                cross_ends += [u, v]
            else:
                ranks["A" if su else "B"].append(t)
        if len(set(cross_ends)) != len(cross_ends):
            continue
        a, b, x = ranks["A"], ranks["B"], ranks["X"]
        if middle_matching:
            ok = all(p < q for p in a for q in x) and all(p < q for p in x for q in b)
        else:
            ok = all(p < q for p in a + b for q in x)
        if ok and all(p < q for p in a for q in b):
            return True
    return False
