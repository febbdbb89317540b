"""Words, Davenport-Schinzel style containment, and the encodings of graphs as words.

Words are tuples of non-negative integers; plain strings are accepted
everywhere and mapped letter by letter.  Only the pattern of repetitions
matters, so all predicates here are invariant under renaming.
"""
from __future__ import annotations

from typing import Sequence

from .core import BudgetExceeded, EdgeOrderedGraph, InvalidGraphError, components, is_star_forest

Word = tuple[int, ...]


def as_word(u) -> Word:
    if isinstance(u, str):
        return tuple(ord(c) for c in u)
    return tuple(int(x) for x in u)


def normalize(u) -> Word:
    """Rename letters to 0, 1, 2, ... in order of first occurrence."""
    seen: dict = {}
    return tuple(seen.setdefault(x, len(seen)) for x in as_word(u))


def parse_word(text: str) -> Word:
    """Space-separated integers, or a compact string of letters."""
    text = text.strip()
    if not text:
        return ()
    if " " in text or text.isdigit():
        return tuple(int(x) for x in text.split())
    return normalize(text)


def format_word(u) -> str:
    u = normalize(u)
    if len(set(u)) <= 26:
        return "".join(chr(ord("a") + x) for x in u)
    return " ".join(map(str, u))


def equivalent(u, v) -> bool:
    return normalize(u) == normalize(v)


def num_letters(u) -> int:
    return len(set(as_word(u)))


def contains_word(u, f) -> bool:
    """Is some subword of ``u`` equivalent to ``f``?

    Letters of ``f`` are assigned to letters of ``u`` by backtracking.  An
    already assigned letter is always matched at its earliest next
    occurrence; a fresh letter branches over the distinct unused letters of
    ``u``, each taken at its earliest next occurrence.
    """
    u, f = as_word(u), normalize(f)
    if not f:
        raise ValueError("the forbidden word must be non-empty")
    if len(f) > len(u):
        return False
    # nxt[p][x]: smallest q >= p with u[q] == x
    letters = sorted(set(u))
    nxt = [dict() for _ in range(len(u) + 1)]
    for p in range(len(u) - 1, -1, -1):
        nxt[p] = dict(nxt[p + 1])
        nxt[p][u[p]] = p
    assign: list = [None] * (max(f) + 1)
    used: set = set()

    def rec(i: int, pos: int) -> bool:
        if i == len(f):
            return True
        if len(f) - i > len(u) - pos:
            return False
        x = assign[f[i]]
        if x is not None:
            q = nxt[pos].get(x)
            return q is not None and rec(i + 1, q + 1)
        for y in letters:
            if y in used:
                continue
            q = nxt[pos].get(y)
            if q is None:
                continue
            assign[f[i]] = y
            used.add(y)
            if rec(i + 1, q + 1):
                return True
            used.discard(y)
            assign[f[i]] = None
        return False

    return rec(0, 0)


def is_k_regular(u, k: int) -> bool:
    """Every ``k`` consecutive letters are distinct (all of them if shorter)."""
    if k < 1:
        raise ValueError("k must be positive")
    u = as_word(u)
    w = min(k, len(u))
    return all(len(set(u[i:i + w])) == w for i in range(len(u) - w + 1))


def greedy_k_regular(u, k: int) -> Word:
    """Left-to-right greedy: keep a letter iff the kept word stays k-regular."""
    if k < 2:
        raise ValueError("k must be at least 2")
    out: list = []
    for x in as_word(u):
        if x not in out[max(0, len(out) - (k - 1)):]:
            out.append(x)
    return tuple(out)


def _star_components(f: EdgeOrderedGraph) -> dict[int, int]:
    """Edge rank index -> component letter, letters by first appearance."""
    if not is_star_forest(f):
        raise InvalidGraphError("expected a star forest")
    comp_of = {}
    for idx, comp in enumerate(components(f)):
        for v in comp:
            comp_of[v] = idx
    letter: dict = {}
    return {t: letter.setdefault(comp_of[u], len(letter)) for t, (u, _) in enumerate(f.edges)}


def w_of(f: EdgeOrderedGraph) -> Word:
    comp = _star_components(f)
    return tuple(comp[t] for t in range(f.m))


def w_prime_of(f: EdgeOrderedGraph) -> Word:
    """w(F) with every letter repeated 2m times."""
    reps = 2 * f.m
    return tuple(x for x in w_of(f) for _ in range(reps))


def u_of(g: EdgeOrderedGraph, flips: int = 0) -> Word:
    """Endpoints of the edges in rank order, smaller vertex first.

    Bit ``t`` of ``flips`` reverses the endpoints of the edge of rank t+1,
    which reaches every one of the 2^m admissible words.
    """
    out: list = []
    for t, (a, b) in enumerate(g.edges):
        out.extend((b, a) if flips >> t & 1 else (a, b))
    return tuple(out)


def ds_lower_forest() -> EdgeOrderedGraph:
    """Five-edge star forest: edges 1, 3, 5 share a center, edges 2, 4 the other."""
    return EdgeOrderedGraph(7, ((0, 2), (1, 3), (0, 4), (1, 5), (0, 6)))


def ds_bruteforce(n: int, f, max_len: int = 64) -> int:
    """Longest ||f||-regular word on at most ``n`` letters avoiding ``f``.

    Avoidance and regularity are both closed under taking prefixes, so a
    depth-first walk of the prefix tree finds the maximum.  New letters are
    introduced in increasing order to remove renaming symmetry.  Raises
    ``BudgetExceeded`` (with ``lower_bound = max_len``) if a word of length
    ``max_len`` is reached.
    """
    f = normalize(f)
    if not f:
        raise ValueError("the forbidden word must be non-empty")
    if n < 1:
        return 0
    k = num_letters(f)
    best = 0
    word: list = []

    def rec(fresh: int):
        nonlocal best
        if len(word) > best:
            best = len(word)
        if len(word) >= max_len:
            raise BudgetExceeded(f"a word of length {max_len} avoids the pattern", lower_bound=max_len)
        recent = word[max(0, len(word) - (k - 1)):] if k > 1 else []
        for x in range(min(fresh + 1, n)):
            if x in recent:
                continue
            word.append(x)
            if not contains_word(word, f):
                rec(max(fresh, x + 1))
            word.pop()

    rec(0)
    return best


def subword_of(v: Sequence, u: Sequence) -> bool:
    """Is ``v`` a (not necessarily contiguous) subsequence of ``u``?"""
    it = iter(u)
    return all(any(x == y for y in it) for x in v)
