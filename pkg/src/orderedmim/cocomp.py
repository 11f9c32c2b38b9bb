"""Cocomparability orderings: umbrella check and desk-scale recognition.

Recognition orients the complement with Golumbic's implication-class
decomposition and sorts the resulting transitive orientation. This is
O(n * m_complement), fine for a few thousand vertices.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph, Ordering
from .patterns import PatternWitness, Verdict


class NotUmbrellaFree(ValueError):
    """The supplied ordering has an umbrella, so it is no cocomparability ordering."""

    def __init__(self, witness: PatternWitness):
        super().__init__(
            f"ordering is not a cocomparability ordering: edge {witness.x}-{witness.z} "
            f"forms an umbrella over {witness.y}"
        )
        self.witness = witness


def verify_umbrella_free(g: Graph, order: Ordering) -> Verdict:
    """Sweep every edge ``ac`` (a before c) over the vertices strictly between.

    Cost is the sum of the edge spans. The witness reported is the one with
    the smallest (a, b, c) positions.
    """
    order.check_for(g)
    pos = order.inverse
    perm = order.perm
    best = None
    for u, v, _ in g.edges:
        i, k = pos[u], pos[v]
        if i > k:
            i, k = k, i
        if best is not None and i > best[0]:
            continue
        left = g.neighbours(perm[i])
        right = g.neighbours(perm[k])
        for j in range(i + 1, k):
            b = perm[j]
            if b not in left and b not in right:
                if best is None or (i, j, k) < best:
                    best = (i, j, k)
                break
    if best is None:
        return Verdict(True, None)
    i, j, k = best
    return Verdict(False, PatternWitness(perm[i], perm[j], perm[k], "p4"))


def require_umbrella_free(g: Graph, order: Ordering) -> None:
    ok, witness = verify_umbrella_free(g, order)
    if not ok:
        raise NotUmbrellaFree(witness)


def transitive_orientation(g: Graph) -> dict[tuple[int, int], bool] | None:
    """Transitive orientation of ``g`` or ``None`` if ``g`` is no comparability graph.

    Returns ``{(u, v): True}`` for every arc ``u -> v``, one arc per edge.
    """
    remaining = [set(a) for a in g.adj]
    arcs: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, _ in g.edges:
        key = (u, v) if u < v else (v, u)
        if key in arcs:
            continue
        # enumerate the implication class of uv inside the remaining graph
        members = [key]
        arcs[key] = (u, v)
        queue = deque([(u, v)])
        while queue:
            a, b = queue.popleft()
            forced = [(a, x) for x in remaining[a] if x != b and x not in remaining[b]]
            forced += [(x, b) for x in remaining[b] if x != a and x not in remaining[a]]
            for x, y in forced:
                k = (x, y) if x < y else (y, x)
                seen = arcs.get(k)
                if seen is None:
                    arcs[k] = (x, y)
                    members.append(k)
                    queue.append((x, y))
                elif seen != (x, y):
                    return None
        for x, y in members:
            remaining[x].discard(y)
            remaining[y].discard(x)
    return {arc: True for arc in arcs.values()}


def compute_cocomp_ordering(g: Graph) -> Ordering | None:
    """An umbrella-free ordering of ``g``, or ``None`` if ``g`` is not cocomparability."""
    comp_edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    orientation = transitive_orientation(Graph(g.n, comp_edges))
    if orientation is None:
        return None
    # in a transitive orientation every arc raises the in-degree strictly
    indegree = [0] * g.n
    for _, v in orientation:
        indegree[v] += 1
    order = Ordering(sorted(range(g.n), key=lambda v: (indegree[v], v)))
    ok, witness = verify_umbrella_free(g, order)
    if not ok:
        raise AssertionError(f"recognizer produced an ordering with umbrella {witness}")
    return order
