"""Exhaustive reference solvers.

Deliberately naive and independent from the fast paths: no stamping, no
orderings, no shared helpers beyond the Graph container.
"""

from __future__ import annotations

import os

from .cocomp import require_umbrella_free
from .graph import Graph, Ordering
from .linesquare import line_square
from .mwim import EXPLICIT_L2_LIMIT, MatchingSolution
from .mwis import Solution, ccwmis
from .rules import star_order

DEFAULT_BRUTE_LIMIT = 24


def brute_limit(default: int = DEFAULT_BRUTE_LIMIT) -> int:
    value = os.environ.get("ORDEREDMIM_BRUTE_LIMIT")
    return int(value) if value else default


def _induces_2k2(g: Graph, e: int, f: int) -> bool:
    a, b, _ = g.edges[e]
    u, v, _ = g.edges[f]
    if {a, b} & {u, v}:
        return False
    return all(not g.has_edge(x, y) for x in (a, b) for y in (u, v))


def _best_subset(weights: list[float], conflicts: list[set[int]]) -> tuple[float, list[int]]:
    """Maximum weight subset of items with no two in conflict.

    Include/exclude recursion in item order, cut when even taking every
    remaining item cannot beat the best found.
    """
    k = len(weights)
    suffix = [0.0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]
    best_weight = 0.0
    best: list[int] = []
    chosen: list[int] = []
    blocked = [0] * k

    def search(i: int, total: float) -> None:
        nonlocal best_weight, best
        if total > best_weight:
            best_weight, best = total, list(chosen)
        if i == k or total + suffix[i] <= best_weight:
            return
        if not blocked[i]:
            chosen.append(i)
            for j in conflicts[i]:
                blocked[j] += 1
            search(i + 1, total + weights[i])
            for j in conflicts[i]:
                blocked[j] -= 1
            chosen.pop()
        search(i + 1, total)

    search(0, 0.0)
    return best_weight, best


def brute_mim(g: Graph, limit: int | None = None) -> MatchingSolution:
    """Exact maximum weight induced matching by exhaustive search."""
    limit = brute_limit() if limit is None else limit
    if g.m > limit:
        raise ValueError(f"brute_mim limited to m <= {limit}, got m = {g.m}")
    items = sorted(range(g.m), key=lambda e: -g.edges[e][2])
    index = {e: i for i, e in enumerate(items)}
    conflicts = [
        {index[f] for f in range(g.m) if f != e and not _induces_2k2(g, e, f)}
        for e in items
    ]
    weight, chosen = _best_subset([g.edges[e][2] for e in items], conflicts)
    members = sorted(items[i] for i in chosen)
    return MatchingSolution(
        weight, members, edges=[(g.edges[e][0], g.edges[e][1]) for e in members]
    )


def brute_mwis(g: Graph, limit: int | None = None) -> Solution:
    """Exact maximum weight independent set by exhaustive search."""
    limit = brute_limit() if limit is None else limit
    if g.n > limit:
        raise ValueError(f"brute_mwis limited to n <= {limit}, got n = {g.n}")
    items = sorted(range(g.n), key=lambda v: -g.vertex_weight(v))
    index = {v: i for i, v in enumerate(items)}
    conflicts = [{index[u] for u in g.adj[v]} for v in items]
    weight, chosen = _best_subset([g.vertex_weight(v) for v in items], conflicts)
    return Solution(weight, sorted(items[i] for i in chosen))


def mim_via_explicit_l2(
    g: Graph, order: Ordering, *, budget: int = EXPLICIT_L2_LIMIT, verify_l2: bool = False
) -> MatchingSolution:
    """Induced matching by running the independent-set routine on a built L^2(G).

    ``order`` is checked on ``g``; the star order is then used as the vertex
    ordering of L^2(G). Its umbrella-freeness there is only re-checked when
    ``verify_l2`` is set, since that sweep dominates the run time.
    """
    if g.m > budget:
        raise ValueError(f"explicit L^2 limited to m <= {budget}, got m = {g.m}")
    require_umbrella_free(g, order)
    l2 = line_square(g)
    pi = star_order(g, order)
    sol = ccwmis(l2, pi.as_vertex_ordering(), verify=verify_l2)
    return MatchingSolution(
        sol.weight,
        sol.members,
        sol.set_weights,
        sol.predecessor,
        sol.stats,
        [pi.endpoints[e] for e in sol.members],
    )
