"""Explicit line graph, graph square and square of the line graph.

These materialise graphs the fast algorithms only use implicitly, and serve
as ground truth for them.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .graph import Graph


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.m:
        raise ValueError(f"edge id {e} out of range 0..{g.m - 1}")


def is_2k2(g: Graph, e: int, f: int) -> bool:
    """True iff edges ``e`` and ``f`` induce a 2K2 (four distinct ends, no edge between)."""
    _check_edge(g, e)
    _check_edge(g, f)
    if e == f:
        raise ValueError("is_2k2 needs two distinct edges")
    a, b = g.endpoints(e)
    u, v = g.endpoints(f)
    if len({a, b, u, v}) < 4:
        return False
    return not (
        g.has_edge(a, u) or g.has_edge(a, v) or g.has_edge(b, u) or g.has_edge(b, v)
    )


def line_graph(g: Graph) -> Graph:
    """L(G): one vertex per edge, adjacent when the edges share an endpoint."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v, _) in enumerate(g.edges):
        incident[u].append(e)
        incident[v].append(e)
    pairs = set()
    for edges_at in incident:
        for i, e in enumerate(edges_at):
            for f in edges_at[i + 1:]:
                pairs.add((min(e, f), max(e, f)))
    weights = [w for _, _, w in g.edges]
    return Graph(g.m, sorted(pairs), weights or None)


def square(g: Graph) -> Graph:
    """G^2: same vertices, adjacent when at distance at most two."""
    pairs = set()
    for s in range(g.n):
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if dist[x] == 2:
                continue
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        pairs.update((s, t) for t in dist if t > s)
    return Graph(g.n, sorted(pairs), g.vertex_weights)


def line_square_matrix(g: Graph) -> np.ndarray:
    """Boolean adjacency matrix of L^2(G) indexed by edge id.

    Edge ``f`` is adjacent to ``e = ab`` iff ``f`` has an endpoint in
    ``N[a] | N[b]``, which is exactly the negation of the 2K2 test.
    """
    m = g.m
    if m == 0:
        return np.zeros((0, 0), dtype=bool)
    incidence = np.zeros((m, g.n), dtype=np.float32)
    ends = np.array([(u, v) for u, v, _ in g.edges], dtype=np.intp)
    rows = np.arange(m)
    incidence[rows, ends[:, 0]] = 1.0
    incidence[rows, ends[:, 1]] = 1.0
    closed = g.adjacency_matrix().astype(np.float32) + np.eye(g.n, dtype=np.float32)
    reach = (incidence @ closed) > 0.5
    mat = (reach.astype(np.float32) @ incidence.T) > 0.5
    np.fill_diagonal(mat, False)
    return mat


def line_square(g: Graph) -> Graph:
    """L^2(G) on the edge ids of ``g``; vertex weights are the edge weights."""
    mat = line_square_matrix(g)
    us, vs = np.nonzero(np.triu(mat, k=1))
    weights = [w for _, _, w in g.edges]
    return Graph(g.m, zip(us.tolist(), vs.tolist()), weights or None)


def line_square_by_marking(g: Graph) -> list[set[int]]:
    """L^2 neighbour sets by marking ``N[a] | N[b]`` per edge; no numpy.

    Runs in time proportional to the size of L^2 plus the stamping work.
    """
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v, _) in enumerate(g.edges):
        incident[u].append(e)
        incident[v].append(e)
    mark = [-1] * g.n
    out = []
    for e, (a, b, _) in enumerate(g.edges):
        mark[a] = mark[b] = e
        for z in g.adj[a]:
            mark[z] = e
        for z in g.adj[b]:
            mark[z] = e
        found = set()
        for z in (a, b, *g.adj[a], *g.adj[b]):
            if mark[z] == e:
                mark[z] = -2 - e  # visit each marked vertex once
                found.update(incident[z])
        found.discard(e)
        out.append(found)
    return out
