from itertools import combinations
from math import comb, factorial

import pytest

from eog.canonical import (CLIQUE_KINDS, CanonicalSpec, canonical_clique, count_canonical, enumerate_canonical,
                           enumerate_specs, extreme_part, knn_can, part_label, realize)
from eog.core import are_isomorphic, canonical_key, close_vertices


def test_min_labeling_of_k4():
    k = canonical_clique(4, "min")
    assert k.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_all_kinds_agree_on_k2():
    keys = {canonical_key(canonical_clique(2, kind)) for kind in CLIQUE_KINDS}
    assert len(keys) == 1


@pytest.mark.parametrize("kind", CLIQUE_KINDS)
def test_hereditary_restriction(kind):
    big = canonical_clique(6, kind)
    for size in (2, 3, 4, 5):
        small = canonical_clique(size, kind)
        for subset in combinations(range(6), size):
            assert are_isomorphic(big.induced(subset), small)


def test_unknown_kind_and_bad_n():
    with pytest.raises(ValueError):
        canonical_clique(4, "median")
    with pytest.raises(ValueError):
        canonical_clique(0, "min")


def test_knn_can_order_and_close_vertices():
    h = knn_can(2)
    # u1v1 < u1v2 < u2v1 < u2v2
    assert h.graph.edges == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert h.side == ("L", "L", "R", "R")
    h3 = knn_can(3)
    assert set(h3.vertices_on("L")) <= close_vertices(h3.graph)


def test_eight_part_labelings_are_isomorphic_to_knn_can():
    for n in (2, 3, 4):
        target = canonical_key(knn_can(n).graph)
        for which in range(1, 9):
            labels = {(j1, n + j2): part_label(which, j1, j2, n) for j1 in range(n) for j2 in range(n)}
            from eog.core import EdgeOrderedGraph
            assert canonical_key(EdgeOrderedGraph.from_labels(2 * n, labels)) == target


def test_two_classes():
    for n in (3, 4):
        c = count_canonical(2, n)
        assert c == {"total": 8, "non_interleaved": 8, "interleaved": 0, "iso": 1}


def test_three_class_counts():
    c = count_canonical(3, 3)
    assert c["non_interleaved"] == factorial(3) * 8 ** 3 == 3072
    assert c["interleaved"] == 768
    assert c["total"] == 3840
    assert c["iso"] == 80


def test_realized_sizes_and_parts():
    k, n = 3, 4
    for spec, g in list(enumerate_canonical(k, n))[::97]:
        assert g.n == k * n
        assert g.m == comb(k, 2) * n * n
        for pi, (a, b) in enumerate(spec.parts):
            labels = {(a * n + j1, b * n + j2): part_label(spec.part_labeling[pi], j1, j2, n)
                      for j1 in range(n) for j2 in range(n)}
            want = sorted(labels, key=labels.get)
            got = [e for e in g.edges if e in labels]
            assert got == want


def test_every_three_class_order_has_an_extreme_part():
    for spec in enumerate_specs(3, 3):
        assert extreme_part(spec) is not None


def test_class_size_two_guards():
    with pytest.raises(ValueError):
        next(enumerate_specs(4, 2))
    with pytest.warns(UserWarning):
        specs = list(enumerate_specs(3, 2))
    assert specs
    with pytest.raises(ValueError):
        next(enumerate_specs(1, 3))


def test_spec_text_round_trip():
    specs = list(enumerate_specs(3, 3))
    for spec in specs[::211]:
        again = CanonicalSpec.from_text(spec.to_text())
        assert again == spec
        assert realize(again) == realize(spec)
