"""Edge orderings induced by a vertex ordering.

The star rule orders edges lexicographically by the positions of their
(lower, higher) endpoints. The bullet rule is the domination partial order:
``ab`` comes before ``uv`` when ``a`` is no later than ``u`` and ``b`` no later
than ``v``. The lexicographic order is a linear extension of it, and that is
the extension ``bullet_order`` returns.
"""

from __future__ import annotations

import enum
from collections import Counter

from .graph import EdgeOrdering, Graph, Ordering


class Relation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


def normalized_endpoints(g: Graph, order: Ordering) -> list[tuple[int, int]]:
    pos = order.inverse
    return [(u, v) if pos[u] < pos[v] else (v, u) for u, v, _ in g.edges]


def star_order(g: Graph, order: Ordering, stats: Counter | None = None) -> EdgeOrdering:
    """Lexicographic edge ordering in O(n + m).

    Adjacency lists are first re-sorted by position with one bucket pass over
    ``order``; a left-to-right sweep then emits ``v_i v_j`` for each ``j > i``.
    ``stats["ops"]`` (if given) receives the number of vertex visits plus
    adjacency entries touched.
    """
    order.check_for(g)
    pos = order.inverse
    ops = 0
    ordered_adj: list[list[int]] = [[] for _ in range(g.n)]
    for v in order.perm:
        ops += 1
        for w in g.adj[v]:
            ordered_adj[w].append(v)
            ops += 1
    perm = []
    endpoints: list[tuple[int, int]] = [(0, 0)] * g.m
    for i, v in enumerate(order.perm):
        ops += 1
        for w in ordered_adj[v]:
            ops += 1
            if pos[w] > i:
                e = g.edge_id(v, w)
                perm.append(e)
                endpoints[e] = (v, w)
    if stats is not None:
        stats["ops"] += ops
    return EdgeOrdering(perm, endpoints)


def bullet_compare(order: Ordering, e: tuple[int, int], f: tuple[int, int]) -> Relation:
    """Relation of edges ``e`` and ``f`` (endpoint pairs) under the bullet rule."""
    pos = order.inverse
    a, b = sorted(e, key=pos.__getitem__)
    u, v = sorted(f, key=pos.__getitem__)
    if (a, b) == (u, v):
        return Relation.EQUAL
    if pos[a] <= pos[u] and pos[b] <= pos[v]:
        return Relation.LESS
    if pos[u] <= pos[a] and pos[v] <= pos[b]:
        return Relation.GREATER
    return Relation.INCOMPARABLE


def bullet_order(g: Graph, order: Ordering, stats: Counter | None = None) -> EdgeOrdering:
    """A linear extension of the bullet partial order, namely the star order."""
    return star_order(g, order, stats)


def bullet_comparable_mask(edge_order: EdgeOrdering, order: Ordering):
    """Boolean matrix over edge-order positions: ``[i, j]`` set when ``i < j``
    and the edges at those positions are bullet-comparable."""
    import numpy as np

    pos = np.asarray(order.inverse, dtype=np.intp)
    pairs = np.array(edge_order.pairs(), dtype=np.intp).reshape(-1, 2)
    lo = pos[pairs[:, 0]]
    hi = pos[pairs[:, 1]]
    less = (lo[:, None] <= lo[None, :]) & (hi[:, None] <= hi[None, :])
    greater = (lo[:, None] >= lo[None, :]) & (hi[:, None] >= hi[None, :])
    return np.triu(less | greater, k=1)
