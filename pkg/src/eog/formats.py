"""Text formats: ``.eog`` for edge-ordered graphs.

``.eog``: first non-comment line ``n m``, then ``m`` lines ``u v`` (0-based);
the line index is the rank.  Lines starting with ``#`` are ignored.  An
optional third column carries a real label; when every edge has one the
edges are re-sorted by label (ties rejected).
"""
from __future__ import annotations

from .core import EdgeOrderedGraph


class EogFormatError(ValueError):
    pass


class HeaderError(EogFormatError):
    pass


class EndpointRangeError(EogFormatError):
    pass


class DuplicateEdgeError(EogFormatError):
    pass


class SelfLoopError(EogFormatError):
    pass


class LabelTieError(EogFormatError):
    pass


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_eog(text: str) -> EdgeOrderedGraph:
    lines = _lines(text)
    if not lines:
        raise HeaderError("missing header line 'n m'")
    head = lines[0].split()
    try:
        n, m = int(head[0]), int(head[1])
        if len(head) != 2 or n < 0 or m < 0:
            raise ValueError
    except (ValueError, IndexError):
        raise HeaderError(f"malformed header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise HeaderError(f"header announces {m} edges, found {len(body)}")
    edges = []
    labels = []
    seen = set()
    for ln in body:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise EogFormatError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EogFormatError(f"malformed edge line {ln!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointRangeError(f"edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
        if len(parts) == 3:
            labels.append(float(parts[2]))
    if labels:
        if len(labels) != len(edges):
            raise EogFormatError("either all edges carry a label or none does")
        if len(set(labels)) != len(labels):
            raise LabelTieError("edge labels must be distinct")
        edges = [e for _, e in sorted(zip(labels, edges))]
    return EdgeOrderedGraph(n, tuple(edges))


def serialize_eog(g: EdgeOrderedGraph) -> str:
    return f"{g.n} {g.m}\n" + "".join(f"{u} {v}\n" for u, v in g.edges)


def read_eog(path) -> EdgeOrderedGraph:
    with open(path) as fh:
        return parse_eog(fh.read())


def write_eog(g: EdgeOrderedGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_eog(g))
