"""Linear-time maximum weight independent set on cocomparability graphs.

Vertices are processed along a cocomparability ordering. Each vertex ``v``
extends the set of its rightmost non-neighbour in a list ``tau`` that is kept
sorted by set weight; the heaviest set sits at the right end of ``tau`` once
all vertices are in.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cocomp import require_umbrella_free
from .graph import Graph, Ordering


@dataclass
class Solution:
    """Result of a chain-building run.

    ``members`` are vertex ids (or edge ids for matchings) in chain order,
    heaviest-set owner first. ``set_weights`` lists the weight of the set
    built for each item in processing order; ``predecessor`` maps each item
    to the item whose set it extended.
    """

    weight: float
    members: list[int]
    set_weights: list[float] = field(default_factory=list)
    predecessor: dict[int, int | None] = field(default_factory=dict)
    stats: Counter = field(default_factory=Counter)

    def chain(self, item: int) -> list[int]:
        out = []
        cur: int | None = item
        while cur is not None:
            out.append(cur)
            cur = self.predecessor[cur]
        return out


class Tau:
    """Doubly linked list over item ids ``0..size-1``, sorted by ``weight``."""

    __slots__ = ("prev", "next", "head", "tail", "weight")

    def __init__(self, size: int, weight: list[float]) -> None:
        self.prev = [-1] * size
        self.next = [-1] * size
        self.head = -1
        self.tail = -1
        self.weight = weight

    def insert(self, item: int, after: int) -> int:
        """Insert ``item`` before the first strictly heavier element right of
        ``after`` (or from the head when ``after`` is -1). Returns the number
        of elements stepped over."""
        w = self.weight[item]
        cur = self.head if after == -1 else self.next[after]
        steps = 0
        while cur != -1 and self.weight[cur] <= w:
            cur = self.next[cur]
            steps += 1
        nxt = cur
        prv = self.tail if nxt == -1 else self.prev[nxt]
        self.prev[item] = prv
        self.next[item] = nxt
        if prv == -1:
            self.head = item
        else:
            self.next[prv] = item
        if nxt == -1:
            self.tail = item
        else:
            self.prev[nxt] = item
        return steps

    def __iter__(self):
        cur = self.head
        while cur != -1:
            yield cur
            cur = self.next[cur]


def ccwmis(g: Graph, order: Ordering, *, verify: bool = True) -> Solution:
    """Maximum weight independent set of cocomparability graph ``g``.

    ``order`` must be umbrella-free; with ``verify`` it is checked first and
    :class:`NotUmbrellaFree` is raised otherwise. Unweighted graphs count
    every vertex as weight 1.

    ``stats`` counts ``stamps`` (neighbour marks), ``checks`` (tau entries
    examined), ``skips`` (examined entries that were neighbours),
    ``insert_steps`` and ``ops`` (their sum plus one per vertex).
    """
    order.check_for(g)
    if verify:
        require_umbrella_free(g, order)
    n = g.n
    w = [g.vertex_weight(v) for v in range(n)]
    set_weight = [0.0] * n
    pred: dict[int, int | None] = {}
    tau = Tau(n, set_weight)
    stamp = [0] * n
    adj = g.adj
    trace = []
    stamps = skips = found = steps = 0
    for i, v in enumerate(order.perm, start=1):
        for z in adj[v]:
            stamp[z] = i
        stamps += len(adj[v])
        u = tau.tail
        while u != -1 and stamp[u] == i:
            skips += 1
            u = tau.prev[u]
        if u != -1:
            found += 1
            set_weight[v] = w[v] + set_weight[u]
            pred[v] = u
        else:
            set_weight[v] = w[v]
            pred[v] = None
        trace.append(set_weight[v])
        steps += tau.insert(v, u)
    stats = Counter(
        stamps=stamps,
        skips=skips,
        checks=skips + found,
        insert_steps=steps,
        ops=stamps + skips + found + steps + n,
    )
    if n == 0:
        return Solution(0.0, [], [], {}, stats)
    z = tau.tail
    members = []
    cur: int | None = z
    while cur is not None:
        members.append(cur)
        cur = pred[cur]
    return Solution(set_weight[z], members, trace, pred, stats)

