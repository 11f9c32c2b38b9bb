import itertools
import random

import pytest

from helpers import complete_graph, cycle_graph, path_graph
from orderedmim import (
    Graph,
    GraphClass,
    NotUmbrellaFree,
    Ordering,
    brute_mwis,
    ccwmis,
    compute_cocomp_ordering,
    generate,
)
from orderedmim.generators import random_weights
from orderedmim.mwis import Tau


def weighted(g, weights):
    return g.with_vertex_weights(weights)


def is_independent(g, vertices):
    return not any(g.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))


def test_single_vertex():
    sol = ccwmis(Graph(1, vertex_weights=[3.0]), Ordering([0]))
    assert sol.weight == 3.0 and sol.members == [0]


def test_empty_graph():
    sol = ccwmis(Graph(0), Ordering([]))
    assert sol.weight == 0.0 and sol.members == []


def test_p3_heavy_middle():
    g = weighted(path_graph(3), [1.0, 5.0, 1.0])
    sol = ccwmis(g, Ordering([0, 1, 2]))
    assert sol.weight == 5.0 and sorted(sol.members) == [1]


def test_p3_light_middle():
    g = weighted(path_graph(3), [2.0, 3.0, 2.0])
    sol = ccwmis(g, Ordering([0, 1, 2]))
    assert sol.weight == 4.0 and sorted(sol.members) == [0, 2]


def test_triangle_takes_heaviest():
    g = weighted(complete_graph(3), [2.0, 1.0, 1.0])
    sol = ccwmis(g, Ordering([0, 1, 2]))
    assert sol.weight == 2.0 and sol.members == [0]


def test_unweighted_counts_vertices():
    sol = ccwmis(Graph(4), Ordering([3, 1, 0, 2]))
    assert sol.weight == 4.0 and sorted(sol.members) == [0, 1, 2, 3]


def test_c4_unweighted():
    g = cycle_graph(4)
    sol = ccwmis(g, Ordering([0, 2, 1, 3]))
    assert sol.weight == 2.0 and is_independent(g, sol.members)


def test_rejects_umbrella():
    with pytest.raises(NotUmbrellaFree):
        ccwmis(Graph(3, [(0, 2)]), Ordering([0, 1, 2]))
    # unchecked runs are allowed, the result is then unspecified
    ccwmis(Graph(3, [(0, 2)]), Ordering([0, 1, 2]), verify=False)


def test_rejects_non_positive_weights():
    with pytest.raises(ValueError):
        Graph(2, vertex_weights=[1.0, 0.0])
    with pytest.raises(ValueError):
        Graph(2, vertex_weights=[1.0, -2.0])


def test_tau_insert_keeps_order():
    w = [3.0, 1.0, 2.0, 2.0, 5.0]
    tau = Tau(5, w)
    tau.insert(0, -1)
    tau.insert(1, -1)
    tau.insert(2, -1)
    tau.insert(3, 2)
    tau.insert(4, -1)
    assert list(tau) == [1, 2, 3, 0, 4]
    assert [w[i] for i in tau] == sorted(w)
    # backwards traversal agrees
    back, cur = [], tau.tail
    while cur != -1:
        back.append(cur)
        cur = tau.prev[cur]
    assert back[::-1] == list(tau)


def _instances(count, seed, max_n):
    rng = random.Random(seed)
    classes = list(GraphClass)
    for trial in range(count):
        cls = classes[trial % len(classes)]
        g, order = generate(cls, rng.randint(1, max_n), rng.random(), trial)
        if cls is not GraphClass.COCOMPARABILITY and cls is not GraphClass.INTERVAL:
            order = compute_cocomp_ordering(g)
            if order is None:
                continue
        yield g.with_vertex_weights(random_weights(g.n, rng)), order


def test_matches_oracle():
    checked = 0
    for g, order in _instances(1200, 5, 16):
        sol = ccwmis(g, order)
        best = brute_mwis(g)
        assert sol.weight == pytest.approx(best.weight, rel=1e-9)
        assert is_independent(g, sol.members)
        assert sum(g.vertex_weight(v) for v in sol.members) == pytest.approx(sol.weight, rel=1e-9)
        checked += 1
    assert checked >= 1000


def test_intermediate_sets_are_independent_and_consistent():
    for g, order in _instances(300, 6, 20):
        sol = ccwmis(g, order)
        for i, v in enumerate(order.perm):
            chain = sol.chain(v)
            assert is_independent(g, chain)
            assert sum(g.vertex_weight(u) for u in chain) == pytest.approx(sol.set_weights[i])
            # the chain only uses vertices processed earlier
            assert all(order.position(u) < order.position(v) for u in chain[1:])


def test_work_is_linear():
    for g, order in _instances(300, 7, 60):
        s = ccwmis(g, order).stats
        assert s["skips"] + s["insert_steps"] <= 2 * g.m + 2 * g.n
        assert s["ops"] <= 4 * (g.m + g.n)
