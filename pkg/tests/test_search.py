from itertools import combinations

import networkx as nx
import pytest

from eog.canonical import canonical_clique
from eog.containment import avoids_family, contains
from eog.core import (BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, cycle_pattern, path_pattern,
                      reverse_order, single_edge)
from eog.oracles import lex_bruteforce
from eog.orderchrom import labelings_up_to_iso
from eog.search import Budget, can_avoid, enumerate_patterns, ex_exact, lex_exact, lex_sequence, lex_value

P132 = path_pattern([1, 3, 2])
P213 = path_pattern([2, 1, 3])
P123 = path_pattern([1, 2, 3])
C1243 = cycle_pattern([1, 2, 4, 3])
TRIANGLE = EdgeOrderedGraph(3, ((0, 1), (1, 2), (0, 2)))
K4 = EdgeOrderedGraph(4, tuple(combinations(range(4), 2)))


def test_examples():
    assert lex_exact(5, [P132]).value == 6
    assert lex_exact(4, [P123]).value == 6
    assert lex_exact(4, [C1243]).value == 6


def test_archived_values():
    assert lex_exact(5, [P123]).value == 6
    assert lex_exact(6, [P123]).value == 7


@pytest.mark.parametrize("n", range(2, 8))
def test_closed_forms(n):
    for h in (P132, P213):
        res = lex_exact(n, [h])
        assert res.exact and res.value == 3 * (n - 1) // 2
        assert res.witness.m == res.value and avoids_family(res.witness, [h])


def test_matches_naive_search():
    pats = [P132, P123, TRIANGLE, path_pattern([1, 2]), cycle_pattern([1, 2, 3, 4])]
    for h in pats:
        for n in range(2, 5):
            assert lex_exact(n, [h]).value == lex_bruteforce(n, [h])


def test_invariants():
    pats = [h for h in enumerate_patterns(3)]
    for h in pats:
        for n in (3, 4):
            v = lex_exact(n, [h]).value
            assert v == lex_exact(n, [reverse_order(h)]).value
            assert lex_exact(n + 1, [h]).value >= v
    for a in pats:
        for b in pats:
            if a is not b and contains(a, b) is not None:
                assert lex_exact(4, [a]).value >= lex_exact(4, [b]).value
    assert lex_exact(5, [P132]).value >= lex_exact(5, [P132, P123]).value


def test_lex_at_least_classical():
    for h in labelings_up_to_iso(path_pattern([1, 2, 3])):
        assert lex_exact(5, [h]).value >= ex_exact(5, nx.path_graph(4))


def test_sequence_and_value():
    seq = lex_sequence(6, [P132])
    assert [r.value for r in seq] == [0, 0, 1, 3, 4, 6, 7]
    assert lex_value(4, [P123]) == 6


def test_budget_status():
    res = lex_exact(8, [P123], Budget(seconds=60, nodes=3))
    assert not res.exact and res.status == "budget_exceeded"
    assert avoids_family(res.witness, [P123])
    with pytest.raises(BudgetExceeded) as exc:
        lex_value(8, [P123], Budget(seconds=60, nodes=3))
    assert exc.value.lower_bound is not None


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("EOG_BUDGET_SECS", "2.5")
    assert Budget().seconds == 2.5
    monkeypatch.setenv("EOG_BUDGET_SECS", "soon")
    with pytest.raises(ValueError):
        Budget()


def test_bad_families():
    with pytest.raises(InvalidGraphError):
        lex_exact(4, [])
    with pytest.raises(InvalidGraphError):
        lex_exact(4, [EdgeOrderedGraph(2)])


def test_can_avoid_examples():
    for target in labelings_up_to_iso(K4):
        lab = can_avoid(K4, [target])
        assert lab is not None and avoids_family(lab, [target])
        assert sorted(lab.edges) == sorted(K4.edges)
    for target in labelings_up_to_iso(TRIANGLE):
        assert can_avoid(TRIANGLE, [target]) is None
    assert can_avoid(P123, [single_edge()]) is None
    with pytest.raises(BudgetExceeded):
        can_avoid(canonical_clique(7, "min"), [P123], max_edges=16)


def test_can_avoid_matches_exhaustive_labelings():
    for g in (path_pattern([1, 2, 3, 4]), cycle_pattern([1, 2, 3, 4]), TRIANGLE):
        for h in enumerate_patterns(3):
            expected = any(avoids_family(lab, [h]) for lab in labelings_up_to_iso(g))
            assert (can_avoid(g, [h]) is not None) == expected


def test_ex_exact():
    assert ex_exact(5, nx.path_graph(4)) == 4
    assert ex_exact(4, nx.cycle_graph(4)) == 4
    for n in (2, 5):
        assert ex_exact(n, nx.complete_graph(2)) == 0
    assert ex_exact(5, nx.complete_graph(3)) == 6
    with pytest.raises(BudgetExceeded):
        ex_exact(8, nx.path_graph(3))


def test_pattern_enumeration_counts():
    pats = enumerate_patterns(4)
    counts = [sum(p.m == m for p in pats) for m in range(1, 5)]
    assert counts == [1, 2, 9, 70]
