"""0-1 matrix patterns and the matrix -> edge-ordered bipartite graph map.

Rows become left vertices ``0..R-1`` and columns right vertices
``R..R+C-1``; every 1-entry is an edge, ordered by column and then by row.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from pathlib import Path

from .core import (BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, SidedPattern,
                   bipartition, canonical_key, components)


@dataclass(frozen=True)
class ZeroOnePattern:
    rows: int
    cols: int
    ones: frozenset

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be non-negative")
        for r, c in self.ones:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "ones", frozenset(self.ones))

    @classmethod
    def from_rows(cls, rows) -> "ZeroOnePattern":
        """Rows as sequences of 0/1 (ints or characters)."""
        rows = [[int(x) for x in row] for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        if any(x not in (0, 1) for r in rows for x in r):
            raise ValueError("entries must be 0 or 1")
        return cls(len(rows), width, frozenset((i, j) for i, r in enumerate(rows)
                                               for j, x in enumerate(r) if x))

    def to_rows(self) -> list[list[int]]:
        return [[int((i, j) in self.ones) for j in range(self.cols)] for i in range(self.rows)]

    def __str__(self):
        return "\n".join("".join(map(str, r)) for r in self.to_rows())


def _as_pattern(m) -> ZeroOnePattern:
    return m if isinstance(m, ZeroOnePattern) else ZeroOnePattern.from_rows(m)


def contains_pattern(M, P) -> bool:
    """Does some order-preserving submatrix of M have a 1 wherever P does?

    Row subsets are enumerated; columns are then matched greedily, each
    pattern column taking the leftmost admissible matrix column.
    """
    M, P = _as_pattern(M), _as_pattern(P)
    if P.rows > M.rows or P.cols > M.cols:
        return False
    if not P.ones:
        return True
    need = [[i for i in range(P.rows) if (i, j) in P.ones] for j in range(P.cols)]
    for rows in combinations(range(M.rows), P.rows):
        c = 0
        for j in range(P.cols):
            while c < M.cols and not all((rows[i], c) in M.ones for i in need[j]):
                c += 1
            if c == M.cols:
                break
            c += 1
        else:
            return True
    return False


def graph_from_matrix_rowcol(M) -> SidedPattern:
    """Edges ordered by column, then by row within a column."""
    M = _as_pattern(M)
    edges = [(r, M.rows + c) for c, r in sorted((c, r) for r, c in M.ones)]
    g = EdgeOrderedGraph(M.rows + M.cols, tuple(edges))
    return SidedPattern(g, ("L",) * M.rows + ("R",) * M.cols)


def graph_from_matrix_col(M) -> SidedPattern:
    """Edges ordered by column; ties inside a column broken by row.

    With the tie-break pinned this coincides with ``graph_from_matrix_rowcol``.
    """
    return graph_from_matrix_rowcol(M)


def patterns_for(h: EdgeOrderedGraph, max_vertices: int = 9) -> set[ZeroOnePattern]:
    """Every minimal P whose row/column graph is isomorphic to ``h``.

    Isolated vertices of ``h`` are dropped first.  Raises
    ``InvalidGraphError`` if ``h`` is not bipartite.
    """
    if isinstance(h, SidedPattern):
        h = h.graph
    h = h.without_isolated()
    if h.m == 0:
        raise InvalidGraphError("pattern must have at least one edge")
    if bipartition(h) is None:
        raise InvalidGraphError("pattern is not bipartite")
    if h.n > max_vertices:
        raise BudgetExceeded(f"{h.n} vertices exceed the guard of {max_vertices}")
    color = bipartition(h)
    comps = components(h)
    target = canonical_key(h)
    found = set()
    for flips in product((0, 1), repeat=len(comps)):
        side = list(color)
        for flip, comp in zip(flips, comps):
            if flip:
                for v in comp:
                    side[v] ^= 1
        rows = [v for v in range(h.n) if side[v] == 0]
        cols = [v for v in range(h.n) if side[v] == 1]
        for rp in permutations(rows):
            ri = {v: i for i, v in enumerate(rp)}
            for cp in permutations(cols):
                ci = {v: j for j, v in enumerate(cp)}
                ones = frozenset((ri[a], ci[b]) if a in ri else (ri[b], ci[a]) for a, b in h.edges)
                p = ZeroOnePattern(len(rows), len(cols), ones)
                if p in found:
                    continue
                if canonical_key(graph_from_matrix_rowcol(p).graph) == target:
                    found.add(p)
    return found


def parse_mat(text: str) -> ZeroOnePattern:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        rows, cols = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}; expected 'rows cols'") from None
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"header promises {rows} rows, found {len(body)}")
    for ln in body:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise ValueError(f"bad row {ln!r}; expected {cols} characters of 0/1")
    if rows == 0:
        return ZeroOnePattern(0, cols, frozenset())
    return ZeroOnePattern.from_rows(body)


def serialize_mat(m: ZeroOnePattern) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += ["".join(map(str, r)) for r in m.to_rows()]
    return "\n".join(lines) + "\n"


def read_mat(path) -> ZeroOnePattern:
    return parse_mat(Path(path).read_text())


def write_mat(m: ZeroOnePattern, path):
    Path(path).write_text(serialize_mat(m))
