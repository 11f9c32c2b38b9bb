from orderedmim import Graph, Ordering

# the weighted cocomparability graph of the worked example; vertex ids follow
# the labels alphabetically
EXAMPLE_NAMES = ["a", "b", "c", "d", "e", "u", "v"]
EXAMPLE_EDGES = [
    ("a", "b", 5.0),
    ("b", "e", 1.0),
    ("e", "d", 1.5),
    ("b", "c", 1.0),
    ("d", "c", 1.0),
    ("c", "u", 1.0),
    ("u", "v", 2.0),
]
EXAMPLE_SIGMA = ["a", "e", "b", "d", "c", "u", "v"]


def vid(label: str) -> int:
    return EXAMPLE_NAMES.index(label)


def build_example() -> tuple[Graph, Ordering]:
    g = Graph(7, [(vid(x), vid(y), w) for x, y, w in EXAMPLE_EDGES])
    return g, Ordering(vid(x) for x in EXAMPLE_SIGMA)


def label_edge(g: Graph, e: int) -> str:
    u, v = g.endpoints(e)
    return "".join(sorted(EXAMPLE_NAMES[u] + EXAMPLE_NAMES[v]))


def path_graph(k: int, weights=None) -> Graph:
    edges = [(i, i + 1) for i in range(k - 1)]
    if weights is not None:
        edges = [(u, v, w) for (u, v), w in zip(edges, weights)]
    return Graph(k, edges)


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int, weights=None) -> Graph:
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    if weights is not None:
        edges = [(u, v, w) for (u, v), w in zip(edges, weights)]
    return Graph(k, edges)


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def star_graph(k: int) -> Graph:
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
