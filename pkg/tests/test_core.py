from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eog.containment import avoids
from eog.core import (EdgeOrderedGraph, InvalidGraphError, SidedPattern, are_isomorphic, bipartition,
                      canonical_form, canonical_key, close_vertices, components, cycle_pattern,
                      has_cycle_length_ge4, is_star_forest, path_pattern, path_rooted, reverse_order)
from eog.oracles import isomorphic_bruteforce
from strategies import edge_ordered_graphs, permutations_of


def test_path_132_order():
    g = path_pattern([1, 3, 2])
    # a=0, b=1, c=2, d=3: ab < cd < bc
    assert g.edges == ((0, 1), (2, 3), (1, 2))


def test_path_single_edge():
    assert path_pattern([1]).edges == ((0, 1),)


def test_path_2314_order():
    # cd < ab < bc < de
    assert path_pattern([2, 3, 1, 4]).edges == ((2, 3), (0, 1), (1, 2), (3, 4))


@pytest.mark.parametrize("bad", [[1, 1], [0, 1], [2, 3], []])
def test_path_rejects_non_permutation(bad):
    with pytest.raises((InvalidGraphError, ValueError)):
        path_pattern(bad)


def test_cycle_patterns():
    c = cycle_pattern([1, 2, 3, 4])
    assert c.edges == ((0, 1), (1, 2), (2, 3), (0, 3))
    assert cycle_pattern([1, 2, 4, 3]).edges == ((0, 1), (1, 2), (0, 3), (2, 3))
    with pytest.raises((InvalidGraphError, ValueError)):
        cycle_pattern([1, 2])


def test_all_triangle_labelings_isomorphic():
    base = cycle_pattern([1, 2, 3])
    for perm in permutations([1, 2, 3]):
        assert are_isomorphic(cycle_pattern(list(perm)), base)


def test_graph_validation():
    with pytest.raises(InvalidGraphError):
        EdgeOrderedGraph(2, ((0, 0),))
    with pytest.raises(InvalidGraphError):
        EdgeOrderedGraph(2, ((0, 1), (1, 0)))
    with pytest.raises(InvalidGraphError):
        EdgeOrderedGraph(2, ((0, 2),))
    assert EdgeOrderedGraph(3, ((2, 1),)).edges == ((1, 2),)


def test_from_labels_sorts_and_rejects_ties():
    g = EdgeOrderedGraph.from_labels(3, {(0, 1): 5.0, (1, 2): -1.0})
    assert g.edges == ((1, 2), (0, 1))
    with pytest.raises(InvalidGraphError):
        EdgeOrderedGraph.from_labels(3, {(0, 1): 1, (1, 2): 1})


def test_key_examples():
    assert canonical_key(path_pattern([1, 3, 2])) == canonical_key(path_pattern([2, 3, 1]))
    assert canonical_key(path_pattern([1, 2, 3])) != canonical_key(path_pattern([1, 3, 2]))
    assert not isomorphic_bruteforce(path_pattern([1, 2, 3]), path_pattern([1, 3, 2]))


@settings(max_examples=300, deadline=None)
@given(edge_ordered_graphs(max_n=6, max_edges=6), st.data())
def test_key_invariant_under_relabeling(g, data):
    perm = data.draw(permutations_of(g.n))
    h = g.relabel(perm)
    assert canonical_key(h) == canonical_key(g)
    assert are_isomorphic(g, h)


@settings(max_examples=300, deadline=None)
@given(edge_ordered_graphs(max_n=5, max_edges=6), edge_ordered_graphs(max_n=5, max_edges=6))
def test_key_equality_matches_bruteforce(g, h):
    assert (canonical_key(g) == canonical_key(h)) == isomorphic_bruteforce(g, h)


@settings(max_examples=100, deadline=None)
@given(edge_ordered_graphs(max_n=6, max_edges=7))
def test_canonical_form_is_isomorphic_image(g):
    form, perm = canonical_form(g)
    assert g.relabel(perm) == form
    assert canonical_key(form) == canonical_key(g)


def test_reverse_examples():
    assert are_isomorphic(reverse_order(path_pattern([1, 3, 2])), path_pattern([2, 1, 3]))
    c = cycle_pattern([1, 2, 3, 4])
    assert are_isomorphic(reverse_order(c), c)


@settings(max_examples=200, deadline=None)
@given(edge_ordered_graphs(max_n=5, max_edges=6), edge_ordered_graphs(max_n=5, max_edges=6))
def test_reverse_involution_and_iso(g, h):
    assert reverse_order(reverse_order(g)) == g
    assert are_isomorphic(g, h) == are_isomorphic(reverse_order(g), reverse_order(h))


def test_close_vertices_examples():
    assert len(close_vertices(cycle_pattern([1, 2, 3, 4]))) == 3
    assert close_vertices(path_pattern([1])) == {0, 1}
    p = path_pattern([2, 3, 1, 4])
    assert not (set(p.edges[0]) & close_vertices(p))
    assert 5 in close_vertices(EdgeOrderedGraph(6, ((0, 1),)))


@settings(max_examples=150, deadline=None)
@given(edge_ordered_graphs(max_n=6, max_edges=8), st.data())
def test_close_vertices_commute_with_isomorphism(g, data):
    perm = data.draw(permutations_of(g.n))
    assert close_vertices(g.relabel(perm)) == {perm[v] for v in close_vertices(g)}


def test_structural_predicates():
    stars = EdgeOrderedGraph(7, ((0, 1), (0, 2), (3, 4), (3, 5), (3, 6)))
    assert is_star_forest(stars)
    assert not has_cycle_length_ge4(stars)
    k4 = EdgeOrderedGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert not is_star_forest(k4)
    assert has_cycle_length_ge4(k4)
    assert not has_cycle_length_ge4(cycle_pattern([1, 2, 3]))
    assert has_cycle_length_ge4(cycle_pattern([1, 2, 3, 4]))
    assert not is_star_forest(EdgeOrderedGraph(3))
    assert not is_star_forest(path_pattern([1, 2, 3]))
    assert len(components(stars)) == 2
    assert bipartition(cycle_pattern([1, 2, 3])) is None


@settings(max_examples=200, deadline=None)
@given(edge_ordered_graphs(max_n=7, max_edges=10))
def test_132_avoiders_have_no_long_cycle(g):
    if avoids(g, path_pattern([1, 3, 2])):
        assert not has_cycle_length_ge4(g)
        assert g.m <= 3 * (g.n - 1) // 2 or g.n == 0


def test_sided_pattern_validation():
    g = path_pattern([1, 2])
    with pytest.raises(InvalidGraphError):
        SidedPattern(g, ("L", "L", "R"))
    with pytest.raises(InvalidGraphError):
        SidedPattern(g, ("L", "R", "L"), root=5)
    rp = path_rooted([1, 3, 2])
    assert rp.root == 0 and rp.side == ("L", "R", "L", "R")


def test_induced_and_without_isolated():
    g = EdgeOrderedGraph(5, ((1, 3), (0, 1), (3, 4)))
    h = g.induced([1, 3, 4])
    assert h.n == 3 and h.edges == ((0, 1), (1, 2))
    assert EdgeOrderedGraph(4, ((1, 3),)).without_isolated().edges == ((0, 1),)
