"""Brute-force reference implementations.

These are deliberately naive and share no code with the optimized paths;
tests and the verification harness compare the two.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .core import EdgeOrderedGraph


def isomorphic_bruteforce(g: EdgeOrderedGraph, h: EdgeOrderedGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    target = [frozenset(e) for e in h.edges]
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) == target[t] for t, (u, v) in enumerate(g.edges)):
            return True
    return False


def contains_bruteforce(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> bool:
    """Try every injective vertex map and test order preservation."""
    if pattern.n > host.n:
        return False
    hrank = {}
    for t, (u, v) in enumerate(host.edges):
        hrank[frozenset((u, v))] = t
    for image in permutations(range(host.n), pattern.n):
        ranks = []
        for u, v in pattern.edges:
            r = hrank.get(frozenset((image[u], image[v])))
            if r is None:
                break
            ranks.append(r)
        else:
            if all(a < b for a, b in zip(ranks, ranks[1:])):
                return True
    return False


def matrix_contains_bruteforce(M, P) -> bool:
    """``M`` and ``P`` as lists of 0/1 rows; every row and column subset."""
    R, C = len(M), len(M[0]) if M else 0
    r, c = len(P), len(P[0]) if P else 0
    if r == 0 or c == 0:
        return True
    for rows in combinations(range(R), r):
        for cols in combinations(range(C), c):
            if all(M[rows[i]][cols[j]] >= P[i][j] for i in range(r) for j in range(c)):
                return True
    return False


def word_contains_bruteforce(u, f) -> bool:
    """Every subword of ``u`` of length ``|f|``, compared up to renaming."""
    def norm(w):
        seen = {}
        return tuple(seen.setdefault(x, len(seen)) for x in w)

    target = norm(f)
    for idx in combinations(range(len(u)), len(f)):
        if norm([u[i] for i in idx]) == target:
            return True
    return False


def lex_bruteforce(n: int, family) -> int:
    """Longest edge sequence on n vertices whose every prefix avoids the family.

    No symmetry reduction and no bounding; containment is decided by
    ``contains_bruteforce``.
    """
    pairs = list(combinations(range(n), 2))
    best = 0

    def rec(edges):
        nonlocal best
        best = max(best, len(edges))
        for p in pairs:
            if p in edges:
                continue
            g = EdgeOrderedGraph(n, tuple(edges) + (p,))
            if not any(contains_bruteforce(g, h) for h in family):
                rec(edges + [p])

    rec([])
    return best
