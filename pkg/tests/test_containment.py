from itertools import permutations

import pytest
from hypothesis import given, settings

from eog.canonical import canonical_clique, enumerate_specs, realize
from eog.constructions import rightright
from eog.containment import (avoids, avoids_family, contains, copy_through_edge, left_avoids, right_avoids,
                             side_contains)
from eog.core import (EdgeOrderedGraph, InvalidGraphError, SidedPattern, path_pattern, path_rooted,
                      reverse_order, single_edge)
from eog.oracles import contains_bruteforce
from strategies import edge_ordered_graphs

P1423 = path_pattern([1, 4, 2, 3])
P2413 = path_pattern([2, 4, 1, 3])
P2314 = path_pattern([2, 3, 1, 4])


def _all_edge_maps(host, pattern):
    rank = {frozenset(e): t + 1 for t, e in enumerate(host.edges)}
    out = []
    for img in permutations(range(host.n), pattern.n):
        rs = [rank.get(frozenset((img[u], img[v]))) for u, v in pattern.edges]
        if None not in rs and all(a < b for a, b in zip(rs, rs[1:])):
            out.append(tuple(rs))
    return out


def test_examples():
    assert contains(canonical_clique(5, "max"), P1423) is None
    assert contains(canonical_clique(5, "min"), P1423) is not None
    assert contains(path_pattern([2, 1]), single_edge()) is not None
    assert avoids_family(canonical_clique(6, "max"), [P1423, P2413])
    assert avoids_family(EdgeOrderedGraph(5), [P1423])


def test_no_canonical_k3x2_avoids_the_pair():
    with pytest.warns(UserWarning):
        specs = list(enumerate_specs(3, 2))
    assert specs
    assert not any(avoids_family(realize(s), [P1423, P2314]) for s in specs)


def test_empty_pattern_rejected():
    with pytest.raises(InvalidGraphError):
        contains(path_pattern([1]), EdgeOrderedGraph(2))
    with pytest.raises(InvalidGraphError):
        avoids_family(path_pattern([1]), [EdgeOrderedGraph(1)])


def test_isolated_pattern_vertices_need_room():
    pat = EdgeOrderedGraph(3, ((0, 1),))
    assert contains(EdgeOrderedGraph(3, ((0, 1),)), pat) is not None
    assert contains(EdgeOrderedGraph(2, ((0, 1),)), pat) is None


@settings(max_examples=400, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=12),
       edge_ordered_graphs(min_n=2, max_n=5, max_edges=5, min_edges=1))
def test_agrees_with_oracle(host, pattern):
    emb = contains(host, pattern)
    assert (emb is not None) == contains_bruteforce(host, pattern)
    assert avoids(host, pattern) == (emb is None)
    if emb is not None:
        assert emb.check(host, pattern)


@settings(max_examples=150, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=9),
       edge_ordered_graphs(min_n=2, max_n=4, max_edges=4, min_edges=1))
def test_witness_is_lexicographically_least(host, pattern):
    maps = _all_edge_maps(host, pattern)
    emb = contains(host, pattern)
    if maps:
        assert emb.edge_map == min(maps)
    else:
        assert emb is None


@settings(max_examples=200, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=10),
       edge_ordered_graphs(min_n=2, max_n=4, max_edges=4, min_edges=1))
def test_copy_through_edge_matches_definition(host, pattern):
    for r in range(1, host.m + 1):
        want = any(m[-1] == r for m in _all_edge_maps(host, pattern))
        assert copy_through_edge(host, pattern, r) == want


@settings(max_examples=200, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=10),
       edge_ordered_graphs(min_n=2, max_n=5, max_edges=4, min_edges=1))
def test_reversal_duality(host, pattern):
    assert avoids(host, pattern) == avoids(reverse_order(host), reverse_order(pattern))


@settings(max_examples=150, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=10),
       edge_ordered_graphs(min_n=2, max_n=5, max_edges=5, min_edges=1),
       edge_ordered_graphs(min_n=2, max_n=4, max_edges=3, min_edges=1))
def test_transitivity(g, h, f):
    if not avoids(g, h) and not avoids(h, f):
        assert not avoids(g, f)


@settings(max_examples=150, deadline=None)
@given(edge_ordered_graphs(min_n=2, max_n=6, max_edges=10, min_edges=1),
       edge_ordered_graphs(min_n=2, max_n=4, max_edges=4, min_edges=1))
def test_deleting_edges_never_creates_copies(g, pattern):
    if avoids(g, pattern):
        for t in range(g.m):
            assert avoids(g.subgraph([r for r in range(1, g.m + 1) if r != t + 1]), pattern)


def test_side_containment_single_edge():
    host = SidedPattern(EdgeOrderedGraph(2, ((0, 1),)), ("L", "R"))
    pat = SidedPattern(EdgeOrderedGraph(2, ((0, 1),)), ("L", "R"), root=0)
    emb = side_contains(host, pat, "left")
    assert emb is not None and emb.vertex_map[0] == 0
    emb = side_contains(host, pat, "right")
    assert emb is not None and emb.vertex_map[0] == 1


def test_side_containment_errors():
    host = SidedPattern(EdgeOrderedGraph(2, ((0, 1),)), ("L", "R"))
    with pytest.raises(InvalidGraphError):
        side_contains(host, SidedPattern(EdgeOrderedGraph(2, ((0, 1),)), ("L", "R")), "left")
    with pytest.raises(ValueError):
        side_contains(host, path_rooted([1]), "up")


def test_rightright_sides():
    pats = [path_rooted([1, 3, 2]), path_rooted([2, 1, 3])]
    for i in range(1, 6):
        g = rightright(i)
        assert all(right_avoids(g, p) for p in pats)
    # computed: the left-rooted 132 path first appears at i = 3
    assert [not left_avoids(rightright(i), pats[0]) for i in range(1, 6)] == [False, False, True, True, True]
