"""Canonical labelings of K_n, the bipartite host K_{n,n}^can, and the
canonical edge-orders of the complete multipartite graph K_{k x n}.

Vertex ``v_{i,j}`` of K_{k x n} (class ``i``, position ``j``, both 0-based)
is vertex ``i*n + j``.  A *part* is the complete bipartite graph between two
classes ``(a, b)`` with ``a < b``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import combinations, product
from typing import Iterator

from .core import BudgetExceeded, EdgeOrderedGraph, SidedPattern, canonical_key

CLIQUE_KINDS = ("min", "max", "inv_min", "inv_max")

# relation codes between two parts P < Q (by part index)
PRECEDE_P = "P"  # every edge of P comes first
PRECEDE_Q = "Q"
INTERLEAVE = ("I1", "I2", "I3", "I4")  # P-edge < Q-edge iff jP <, <=, >, >= jQ


def canonical_clique(n: int, kind: str) -> EdgeOrderedGraph:
    """One of the four canonical labelings of K_n on vertices v_1..v_n -> 0..n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    formulas = {
        "min": lambda i, j: n * i + j,
        "max": lambda i, j: n * j + i,
        "inv_min": lambda i, j: n * i - j,
        "inv_max": lambda i, j: n * j - i,
    }
    try:
        f = formulas[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {CLIQUE_KINDS}") from None
    labels = {(i - 1, j - 1): f(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return EdgeOrderedGraph.from_labels(n, labels)


def knn_can(n: int) -> SidedPattern:
    """K_{n,n}^can: left u_i -> i-1, right v_j -> n+j-1, edge u_i v_j labeled n*i + j."""
    if n < 1:
        raise ValueError("n must be positive")
    labels = {(i - 1, n + j - 1): n * i + j for i in range(1, n + 1) for j in range(1, n + 1)}
    g = EdgeOrderedGraph.from_labels(2 * n, labels)
    return SidedPattern(g, ("L",) * n + ("R",) * n)


def part_label(which: int, j1: int, j2: int, n: int) -> int:
    """The eight canonical labelings L1..L8 of a part; j1, j2 index the two classes."""
    return (
        n * j1 + j2, n * j1 - j2, -n * j1 + j2, -n * j1 - j2,
        n * j2 + j1, n * j2 - j1, -n * j2 + j1, -n * j2 - j1,
    )[which - 1]


@dataclass(frozen=True)
class CanonicalSpec:
    k: int
    n: int
    parts: tuple[tuple[int, int], ...]
    part_labeling: tuple[int, ...]  # per part, 1..8
    pair_relation: tuple[str, ...]  # per pair of parts (combinations order)

    @property
    def interleaved(self) -> bool:
        return any(r in INTERLEAVE for r in self.pair_relation)

    def with_n(self, n: int) -> "CanonicalSpec":
        return CanonicalSpec(self.k, n, self.parts, self.part_labeling, self.pair_relation)

    def to_text(self) -> str:
        return (f"k={self.k} n={self.n} labels={','.join(map(str, self.part_labeling))} "
                f"rel={','.join(self.pair_relation)}")

    @classmethod
    def from_text(cls, text: str) -> "CanonicalSpec":
        fields = dict(tok.split("=", 1) for tok in text.split())
        k = int(fields["k"])
        labels = tuple(int(x) for x in fields["labels"].split(","))
        rel = tuple(fields["rel"].split(",")) if fields.get("rel") else ()
        return cls(k, int(fields["n"]), tuple(combinations(range(k), 2)), labels, rel)

    def realize(self) -> EdgeOrderedGraph:
        return realize(self)


def _shared_class(p: tuple[int, int], q: tuple[int, int]) -> int | None:
    s = set(p) & set(q)
    return s.pop() if s else None


def _edges_of(spec_parts, n):
    out = []
    for pi, (a, b) in enumerate(spec_parts):
        for ja in range(n):
            for jb in range(n):
                out.append((pi, ja, jb))
    return out


def _comparator(parts, labeling, relation, n):
    npairs = {pq: idx for idx, pq in enumerate(combinations(range(len(parts)), 2))}

    def index_in(edge, cls):
        pi, ja, jb = edge
        a, b = parts[pi]
        return ja if cls == a else jb

    def less(e, f) -> bool:
        pe, pf = e[0], f[0]
        if pe == pf:
            w = labeling[pe]
            return part_label(w, e[1], e[2], n) < part_label(w, f[1], f[2], n)
        if pe < pf:
            return _p_before_q(e, f, pe, pf)
        return not _p_before_q(f, e, pf, pe)

    def _p_before_q(e, f, pe, pf) -> bool:
        rel = relation[npairs[(pe, pf)]]
        if rel == PRECEDE_P:
            return True
        if rel == PRECEDE_Q:
            return False
        s = _shared_class(parts[pe], parts[pf])
        je, jf = index_in(e, s), index_in(f, s)
        if rel == "I1":
            return je < jf
        if rel == "I2":
            return je <= jf
        if rel == "I3":
            return je > jf
        return je >= jf

    return less


def _is_linear(edges, less) -> bool:
    # a tournament is transitive iff its out-degrees are pairwise distinct
    outdeg = [0] * len(edges)
    for i, j in combinations(range(len(edges)), 2):
        if less(edges[i], edges[j]):
            outdeg[i] += 1
        else:
            outdeg[j] += 1
    return len(set(outdeg)) == len(outdeg)


@lru_cache(maxsize=None)
def _pair_ok(p, q, lp, lq, rel, n) -> bool:
    parts = (p, q)
    less = _comparator(parts, (lp, lq), (rel,), n)
    return _is_linear(_edges_of(parts, n), less)


def is_linearizable(spec: CanonicalSpec) -> bool:
    """Explicit check that the spec's pairwise choices give a total order.

    Any cyclic triple of edges touches at most three positions per class and
    the relations only compare positions, so checking at ``min(n, 3)`` decides
    every ``n``.
    """
    n = min(spec.n, 3)
    less = _comparator(spec.parts, spec.part_labeling, spec.pair_relation, n)
    return _is_linear(_edges_of(spec.parts, n), less)


def realize(spec: CanonicalSpec) -> EdgeOrderedGraph:
    """The edge-ordered K_{k x n} of a linearizable spec."""
    n = spec.n
    less = _comparator(spec.parts, spec.part_labeling, spec.pair_relation, n)
    edges = _edges_of(spec.parts, n)
    ordered = sorted(edges, key=cmp_to_key(lambda e, f: -1 if less(e, f) else 1))
    out = []
    for pi, ja, jb in ordered:
        a, b = spec.parts[pi]
        out.append((a * n + ja, b * n + jb))
    return EdgeOrderedGraph(spec.k * n, tuple(out))


def relation_options(p, q) -> tuple[str, ...]:
    if _shared_class(p, q) is None:
        return (PRECEDE_P, PRECEDE_Q)
    return (PRECEDE_P, PRECEDE_Q) + INTERLEAVE


def enumerate_specs(k: int, n: int, max_candidates: int = 2_000_000) -> Iterator[CanonicalSpec]:
    """Every linearizable spec of K_{k x n}, in lexicographic spec order."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 2:
        raise ValueError("class size must be at least 2")
    if n == 2:
        if k >= 4:
            raise ValueError("canonical orders of K_{k x 2} are not count-invariant for k >= 4")
        if k == 3:
            warnings.warn("class size 2: canonical-order counts may differ from n >= 3",
                          stacklevel=2)
    parts = tuple(combinations(range(k), 2))
    pairs = list(combinations(range(len(parts)), 2))
    estimate = 8 ** len(parts)
    for pi, qi in pairs:
        estimate *= len(relation_options(parts[pi], parts[qi]))
    if estimate > max_candidates:
        raise BudgetExceeded(f"{estimate} candidate specs for k={k} exceed the limit {max_candidates}")
    check_n = min(n, 3)
    for labeling in product(range(1, 9), repeat=len(parts)):
        allowed = []
        for pi, qi in pairs:
            p, q = parts[pi], parts[qi]
            allowed.append([r for r in relation_options(p, q)
                            if _pair_ok(p, q, labeling[pi], labeling[qi], r, check_n)])
        for rel in product(*allowed):
            spec = CanonicalSpec(k, n, parts, labeling, rel)
            if len(parts) <= 2 or is_linearizable(spec):
                yield spec


def enumerate_canonical(k: int, n: int, max_candidates: int = 2_000_000
                        ) -> Iterator[tuple[CanonicalSpec, EdgeOrderedGraph]]:
    for spec in enumerate_specs(k, n, max_candidates):
        yield spec, realize(spec)


def iso_classes(k: int, n: int) -> dict:
    """Canonical key -> first spec realizing that isomorphism class."""
    out: dict = {}
    for spec, g in enumerate_canonical(k, n):
        out.setdefault(canonical_key(g), spec)
    return out


def count_canonical(k: int, n: int) -> dict[str, int]:
    total = plain = 0
    keys = set()
    for spec, g in enumerate_canonical(k, n):
        total += 1
        plain += not spec.interleaved
        keys.add(canonical_key(g))
    return {"total": total, "non_interleaved": plain, "interleaved": total - plain, "iso": len(keys)}


def extreme_part(spec: CanonicalSpec) -> tuple[str, int] | None:
    """A part that precedes all others ('first', p) or follows all ('last', p)."""
    npairs = {pq: idx for idx, pq in enumerate(combinations(range(len(spec.parts)), 2))}

    def before(p, q):
        if p < q:
            return spec.pair_relation[npairs[(p, q)]] == PRECEDE_P
        return spec.pair_relation[npairs[(q, p)]] == PRECEDE_Q

    idx = range(len(spec.parts))
    for p in idx:
        if all(before(p, q) for q in idx if q != p):
            return ("first", p)
    for p in idx:
        if all(before(q, p) for q in idx if q != p):
            return ("last", p)
    return None
