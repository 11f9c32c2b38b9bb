"""Random graphs of each supported class, returned with a witness ordering.

Each generator builds the graph from the class's standard model and keeps the
construction order as the witness, so no recognition step is needed. Labels
are shuffled afterwards so the witness is not simply the identity.
"""

from __future__ import annotations

import random

from .graph import Graph, GraphClass, Ordering


def _relabel(n, edges, order, rng):
    label = list(range(n))
    rng.shuffle(label)
    edges = sorted(
        (min(label[u], label[v]), max(label[u], label[v])) for u, v in edges
    )
    return Graph(n, edges), Ordering(label[v] for v in order)


def _interval(n, density, rng):
    intervals = []
    for v in range(n):
        left = rng.random()
        intervals.append((left, left + density * rng.random(), v))
    # left-endpoint order; ties put zero-length intervals first
    intervals.sort()
    edges = []
    for i, (li, ri, u) in enumerate(intervals):
        for lj, rj, v in intervals[i + 1:]:
            if lj >= ri:
                break
            if li < rj:
                edges.append((u, v))
    return edges, [v for _, _, v in intervals]


def _chordal(n, density, rng):
    # every new vertex attaches to a clique of earlier vertices, so each
    # vertex's left neighbourhood in construction order is a clique
    nbr: list[set[int]] = [set() for _ in range(n)]
    edges = []
    attach = density ** 0.5
    for v in range(1, n):
        if rng.random() >= attach:
            continue
        u = rng.randrange(v)
        clique = [u]
        candidates = sorted(nbr[u])
        rng.shuffle(candidates)
        for w in candidates:
            if rng.random() < density and all(w in nbr[x] for x in clique):
                clique.append(w)
        for x in clique:
            nbr[v].add(x)
            nbr[x].add(v)
            edges.append((x, v))
    return edges, list(range(n))


def _split(n, density, rng):
    k = rng.randint(1, n)
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(u, v) for v in range(k, n) for u in range(k) if rng.random() < density]
    clique = list(range(k))
    stable = list(range(k, n))
    rng.shuffle(clique)
    rng.shuffle(stable)
    return edges, clique + stable


def _threshold(n, density, rng):
    edges = []
    for v in range(1, n):
        if rng.random() < density:
            edges.extend((u, v) for u in range(v))
    # reversed insertion sequence avoids both p1 and p2
    return edges, list(range(n - 1, -1, -1))


def _cocomparability(n, density, rng):
    # random DAG along the linear order 0..n-1, transitively closed; the
    # incomparable pairs form the graph and 0..n-1 is an umbrella-free order
    p_arc = (1.0 - density) * min(1.0, 6.0 / n)
    reach = [0] * n
    for v in range(n - 1, -1, -1):
        r = 0
        for s in range(v + 1, n):
            if not (r >> s) & 1 and rng.random() < p_arc:
                r |= (1 << s) | reach[s]
        reach[v] = r
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if not (reach[u] >> v) & 1
    ]
    return edges, list(range(n))


_BUILDERS = {
    GraphClass.INTERVAL: _interval,
    GraphClass.CHORDAL: _chordal,
    GraphClass.SPLIT: _split,
    GraphClass.THRESHOLD: _threshold,
    GraphClass.COCOMPARABILITY: _cocomparability,
}


def generate(
    graph_class: GraphClass | str, n: int, density: float = 0.5, seed: int | None = 0
) -> tuple[Graph, Ordering]:
    """Random member of ``graph_class`` on ``n`` vertices with a witness ordering.

    ``density`` in [0, 1] steers edge density; its exact meaning is
    class-specific. The result depends only on the arguments.
    """
    if isinstance(graph_class, str):
        graph_class = GraphClass.parse(graph_class)
    if not isinstance(graph_class, GraphClass):
        raise ValueError(f"unsupported graph class {graph_class!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(f"{graph_class.value}:{n}:{density!r}:{seed}")
    edges, order = _BUILDERS[graph_class](n, density, rng)
    return _relabel(n, edges, order, rng)


def random_weights(count: int, rng: random.Random, low: float = 0.0, high: float = 10.0) -> list[float]:
    """Weights drawn uniformly from the half-open range (low, high]."""
    return [high - (high - low) * rng.random() for _ in range(count)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) on ``0..n-1``."""
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
