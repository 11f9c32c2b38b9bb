"""Maximum weight induced matching on cocomparability graphs in O(m + sum deg2).

The independent-set chain construction is run over the vertices of L^2(G)
in star order, without building L^2(G). Adjacency in L^2 is answered by
stamping: while processing ``e_i = ab`` every neighbour of ``a`` gets
``A[z] = i`` and every neighbour of ``b`` gets ``B[z] = i``. An earlier edge
``tk`` then forms a 2K2 with ``ab`` exactly when none of ``A[t], A[k], B[t],
B[k]`` equals ``i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cocomp import require_umbrella_free
from .graph import Graph, Ordering
from .linesquare import is_2k2, line_square, line_square_by_marking
from .mwis import Solution, Tau
from .rules import star_order


@dataclass
class MatchingSolution(Solution):
    """A :class:`Solution` whose members are edge ids.

    ``edges`` gives the matching as (lo, hi) endpoint pairs, in the same
    order as ``members``.
    """

    edges: list[tuple[int, int]] | None = None


def ccwmim(g: Graph, order: Ordering, *, verify: bool = True, debug: bool = False) -> MatchingSolution:
    """Maximum weight induced matching of edge-weighted cocomparability graph ``g``.

    ``order`` must be an umbrella-free ordering of ``g`` (checked when
    ``verify``). With ``debug`` every stamp test is compared against the
    explicit 2K2 predicate.

    ``set_weights`` follows the star order of the edges. ``stats`` counts
    ``stamps``, ``checks`` (tau entries tested), ``insert_steps`` and ``ops``
    (their sum plus one per edge).
    """
    order.check_for(g)
    if verify:
        require_umbrella_free(g, order)
    stats: Counter = Counter()
    pi = star_order(g, order, stats)
    stats["star_ops"] = stats.pop("ops")
    m = g.m
    if m == 0:
        stats["ops"] = 0
        return MatchingSolution(0.0, [], [], {}, stats, [])

    a_stamp = [0] * g.n
    b_stamp = [0] * g.n
    ends = pi.endpoints  # F: direct access to the stamp slots of each edge
    weight = [w for _, _, w in g.edges]
    set_weight = [0.0] * m
    pred: dict[int, int | None] = {}
    tau = Tau(m, set_weight)
    trace = []
    stamps = checks = steps = 0
    adj = g.adj

    for i, e in enumerate(pi.perm, start=1):
        a, b = ends[e]
        for z in adj[a]:
            a_stamp[z] = i
        for z in adj[b]:
            b_stamp[z] = i
        stamps += len(adj[a]) + len(adj[b])
        f = tau.tail
        while f != -1:
            checks += 1
            t, k = ends[f]
            free = a_stamp[t] != i and a_stamp[k] != i and b_stamp[t] != i and b_stamp[k] != i
            if debug and free != is_2k2(g, e, f):
                raise AssertionError(f"stamp test disagrees with 2K2 test for edges {e}, {f}")
            if free:
                break
            f = tau.prev[f]
        if f != -1:
            set_weight[e] = weight[e] + set_weight[f]
            pred[e] = f
        else:
            set_weight[e] = weight[e]
            pred[e] = None
        trace.append(set_weight[e])
        steps += tau.insert(e, f)

    stats["stamps"] = stamps
    stats["checks"] = checks
    stats["insert_steps"] = steps
    stats["ops"] = stamps + checks + steps + m
    z = tau.tail
    members = []
    cur: int | None = z
    while cur is not None:
        members.append(cur)
        cur = pred[cur]
    return MatchingSolution(
        set_weight[z], members, trace, pred, stats, [ends[e] for e in members]
    )


@dataclass
class Deg2Profile:
    """Per-edge L^2 degrees next to the per-edge neighbourhood-degree bound,
    and the aggregate ``2 m max_degree`` bound."""

    deg2: list[int]
    edge_bound: list[int]
    total: int
    aggregate_bound: int

    def edge_bound_holds(self) -> bool:
        return all(d <= b for d, b in zip(self.deg2, self.edge_bound))

    def aggregate_bound_holds(self) -> bool:
        return self.total <= self.aggregate_bound


EXPLICIT_L2_LIMIT = 5000


def deg2_profile(g: Graph) -> Deg2Profile:
    if g.m <= EXPLICIT_L2_LIMIT:
        l2 = line_square(g)
        deg2 = [l2.degree(e) for e in range(g.m)]
    else:
        deg2 = [len(s) for s in line_square_by_marking(g)]
    deg = [g.degree(v) for v in range(g.n)]
    bound = []
    for a, b, _ in g.edges:
        bound.append(
            sum(deg[v] for v in g.adj[a] if v != b) + sum(deg[v] for v in g.adj[b] if v != a)
        )
    return Deg2Profile(deg2, bound, sum(deg2), 2 * g.m * g.max_degree())
