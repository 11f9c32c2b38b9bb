"""Forbidden three-vertex ordering patterns and the matcher for them.

A pattern fixes, for an ordered triple ``x < y < z``, whether each of the
pairs ``xy``, ``xz`` and ``yz`` is an edge. An ordering is p-free when no
triple matches p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .graph import Graph, GraphClass, Ordering

EDGE = True
NON_EDGE = False


@dataclass(frozen=True)
class Pattern:
    name: str
    xy: bool
    xz: bool
    yz: bool

    def matches(self, xy: bool, xz: bool, yz: bool) -> bool:
        return xy == self.xy and xz == self.xz and yz == self.yz

    def __str__(self) -> str:
        return self.name


P1 = Pattern("p1", NON_EDGE, EDGE, EDGE)
P2 = Pattern("p2", EDGE, NON_EDGE, NON_EDGE)
P3 = Pattern("p3", NON_EDGE, NON_EDGE, EDGE)
P4 = Pattern("p4", NON_EDGE, EDGE, NON_EDGE)  # umbrella
P5 = Pattern("p5", NON_EDGE, NON_EDGE, NON_EDGE)

PATTERNS = {p.name: p for p in (P1, P2, P3, P4, P5)}

CLASS_PATTERNS: dict[GraphClass, tuple[Pattern, ...]] = {
    GraphClass.CHORDAL: (P1,),
    GraphClass.INTERVAL: (P1, P4),
    GraphClass.SPLIT: (P1, P3),
    GraphClass.THRESHOLD: (P1, P2),
    GraphClass.COCOMPARABILITY: (P4,),
}


class PatternWitness(NamedTuple):
    x: int
    y: int
    z: int
    pattern: str


class Verdict(NamedTuple):
    ok: bool
    witness: PatternWitness | None


def positional_matrix(g: Graph, order: Ordering) -> np.ndarray:
    """Adjacency matrix with rows and columns permuted into ordering positions."""
    order.check_for(g)
    perm = np.asarray(order.perm, dtype=np.intp)
    return g.adjacency_matrix()[np.ix_(perm, perm)]


def find_in_matrix(mat: np.ndarray, pattern: Pattern, mask: np.ndarray | None = None):
    """Smallest position triple ``i < j < k`` matching ``pattern`` in ``mat``.

    ``mat`` is a boolean adjacency matrix already in position order. If
    ``mask`` is given, only triples whose three pairs are all set in ``mask``
    are considered. Returns ``None`` or ``(i, j, k)``.
    """
    n = mat.shape[0]
    if n < 3:
        return None
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    if mask is not None:
        upper &= mask
    first = (mat == pattern.xy) & upper
    outer = (mat == pattern.xz) & upper
    inner = (mat == pattern.yz) & upper
    if not (first.any() and outer.any() and inner.any()):
        return None
    # thirds[i, j] = #{k : outer[i, k] and inner[j, k]}; inner forces k > j
    thirds = outer.astype(np.float32) @ inner.T.astype(np.float32)
    hits = first & (thirds > 0.5)
    if not hits.any():
        return None
    flat = int(np.argmax(hits.ravel()))
    i, j = divmod(flat, n)
    k = int(np.argmax(outer[i] & inner[j]))
    return i, j, k


def find_pattern(g: Graph, order: Ordering, pattern: Pattern) -> PatternWitness | None:
    """Lexicographically first (by position) triple of ``order`` matching ``pattern``."""
    hit = find_in_matrix(positional_matrix(g, order), pattern)
    if hit is None:
        return None
    i, j, k = hit
    return PatternWitness(order[i], order[j], order[k], pattern.name)


def find_any(g: Graph, order: Ordering, patterns: Iterable[Pattern]) -> PatternWitness | None:
    mat = positional_matrix(g, order)
    for p in patterns:
        hit = find_in_matrix(mat, p)
        if hit is not None:
            i, j, k = hit
            return PatternWitness(order[i], order[j], order[k], p.name)
    return None


def verify_class_ordering(g: Graph, order: Ordering, graph_class: GraphClass) -> Verdict:
    """Check ``order`` avoids every forbidden pattern of ``graph_class``.

    Patterns are tried in p1..p5 order and the first witness is reported.
    """
    witness = find_any(g, order, CLASS_PATTERNS[graph_class])
    return Verdict(witness is None, witness)


DEFAULT_SEARCH_LIMIT = 9


def exists_pattern_free_ordering(
    g: Graph, patterns: Iterable[Pattern], limit: int = DEFAULT_SEARCH_LIMIT
) -> Ordering | None:
    """Exhaustive search for an ordering of ``g`` avoiding all ``patterns``.

    Depth-first over prefixes; a prefix is abandoned as soon as appending a
    vertex closes a forbidden triple. Only meant for tiny graphs.
    """
    if g.n > limit:
        raise ValueError(f"exhaustive ordering search limited to n <= {limit}, got n = {g.n}")
    patterns = tuple(patterns)
    n = g.n
    full = (1 << n) - 1
    nbr = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    non = [full & ~nbr[v] & ~(1 << v) for v in range(n)]

    prefix: list[int] = []
    # earlier[v]: bitmask of prefix vertices placed before v
    earlier = [0] * n

    def closes_pattern(z: int, placed: int) -> bool:
        for p in patterns:
            xs = placed & (nbr[z] if p.xz else non[z])
            if not xs:
                continue
            ys = placed & (nbr[z] if p.yz else non[z])
            while ys:
                low = ys & -ys
                y = low.bit_length() - 1
                ys ^= low
                if xs & earlier[y] & (nbr[y] if p.xy else non[y]):
                    return True
        return False

    def extend(placed: int) -> bool:
        if placed == full:
            return True
        rest = full & ~placed
        while rest:
            low = rest & -rest
            z = low.bit_length() - 1
            rest ^= low
            if closes_pattern(z, placed):
                continue
            earlier[z] = placed
            prefix.append(z)
            if extend(placed | low):
                return True
            prefix.pop()
        return False

    if extend(0):
        return Ordering(prefix)
    return None
