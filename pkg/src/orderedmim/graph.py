"""Graph and ordering data model plus the plain-text file formats.

Vertices are dense integers ``0..n-1``; edges are numbered in input order.
Objects are treated as immutable once built.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph, ordering or weight files."""


class GraphClass(enum.Enum):
    CHORDAL = "chordal"
    INTERVAL = "interval"
    SPLIT = "split"
    THRESHOLD = "threshold"
    COCOMPARABILITY = "cocomparability"

    @classmethod
    def parse(cls, name: str) -> "GraphClass":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(c.value for c in cls)
            raise ValueError(f"unsupported graph class {name!r} (choose from {choices})") from None


def _check_weight(w: float, what: str) -> float:
    w = float(w)
    if not math.isfinite(w) or w <= 0:
        raise ValueError(f"{what} must be a finite positive number, got {w!r}")
    return w


class Graph:
    """Simple undirected graph with positive edge weights and optional vertex weights.

    ``edges`` holds ``(u, v, w)`` triples in id order, ``adj[v]`` is the sorted
    neighbour tuple of ``v``.
    """

    __slots__ = ("n", "edges", "adj", "vertex_weights", "_nbr", "_edge_id", "_matrix")

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence] = (),
        vertex_weights: Sequence[float] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        triples = []
        edge_id: dict[tuple[int, int], int] = {}
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1.0
            elif len(e) == 3:
                u, v, w = e
            else:
                raise ValueError(f"edge must be (u, v) or (u, v, w), got {e!r}")
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in edge_id:
                raise ValueError(f"duplicate edge ({u}, {v})")
            w = _check_weight(w, f"weight of edge ({u}, {v})")
            edge_id[key] = len(triples)
            triples.append((u, v, w))
            nbr[u].add(v)
            nbr[v].add(u)
        self.edges: tuple[tuple[int, int, float], ...] = tuple(triples)
        self._edge_id = edge_id
        self._nbr = tuple(frozenset(s) for s in nbr)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbr)
        if vertex_weights is not None:
            if len(vertex_weights) != self.n:
                raise ValueError("need exactly one weight per vertex")
            vertex_weights = tuple(
                _check_weight(w, f"weight of vertex {v}") for v, w in enumerate(vertex_weights)
            )
        self.vertex_weights: tuple[float, ...] | None = vertex_weights
        self._matrix = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def neighbours(self, v: int) -> frozenset[int]:
        return self._nbr[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge ``uv``; raises ``KeyError`` if absent."""
        return self._edge_id[(u, v) if u < v else (v, u)]

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def weight(self, e: int) -> float:
        return self.edges[e][2]

    def vertex_weight(self, v: int) -> float:
        return 1.0 if self.vertex_weights is None else self.vertex_weights[v]

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self._edge_id)

    def adjacency_matrix(self):
        """Dense boolean adjacency matrix (numpy), cached."""
        if self._matrix is None:
            import numpy as np

            mat = np.zeros((self.n, self.n), dtype=bool)
            if self.edges:
                us = [u for u, _, _ in self.edges]
                vs = [v for _, v, _ in self.edges]
                mat[us, vs] = True
                mat[vs, us] = True
            mat.setflags(write=False)
            self._matrix = mat
        return self._matrix

    def with_vertex_weights(self, weights: Sequence[float] | None) -> "Graph":
        return Graph(self.n, self.edges, weights)

    def with_unit_weights(self) -> "Graph":
        return Graph(self.n, [(u, v) for u, v, _ in self.edges], self.vertex_weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.vertex_weights == other.vertex_weights
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.vertex_weights))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """A permutation of ``0..n-1`` with O(1) position lookup."""

    __slots__ = ("perm", "inverse")

    def __init__(self, perm: Iterable[int]) -> None:
        perm = tuple(int(v) for v in perm)
        inverse = [-1] * len(perm)
        for i, v in enumerate(perm):
            if not 0 <= v < len(perm) or inverse[v] != -1:
                raise ValueError(f"ordering is not a permutation of 0..{len(perm) - 1}")
            inverse[v] = i
        self.perm: tuple[int, ...] = perm
        self.inverse: tuple[int, ...] = tuple(inverse)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(range(n))

    def __len__(self) -> int:
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def __getitem__(self, i: int) -> int:
        return self.perm[i]

    def position(self, v: int) -> int:
        return self.inverse[v]

    def precedes(self, u: int, v: int) -> bool:
        return self.inverse[u] < self.inverse[v]

    def check_for(self, g: Graph) -> None:
        if len(self.perm) != g.n:
            raise ValueError(f"ordering has {len(self.perm)} entries but the graph has {g.n} vertices")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"Ordering({list(self.perm)})"


class EdgeOrdering:
    """Ordering of a graph's edge ids, each edge carrying its (lo, hi) endpoints.

    ``endpoints[e]`` is indexed by edge id; ``lo`` precedes ``hi`` in the
    vertex ordering the edge ordering was built from.
    """

    __slots__ = ("perm", "inverse", "endpoints")

    def __init__(self, perm: Iterable[int], endpoints: Sequence[tuple[int, int]]) -> None:
        order = Ordering(perm)
        if len(order) != len(endpoints):
            raise ValueError("edge ordering and endpoint table differ in length")
        self.perm = order.perm
        self.inverse = order.inverse
        self.endpoints: tuple[tuple[int, int], ...] = tuple(endpoints)

    def __len__(self) -> int:
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def pairs(self) -> list[tuple[int, int]]:
        """Endpoint pairs in ordering sequence."""
        return [self.endpoints[e] for e in self.perm]

    def as_vertex_ordering(self) -> Ordering:
        """The same permutation read as a vertex ordering of ``line_square(g)``."""
        return Ordering(self.perm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeOrdering):
            return NotImplemented
        return self.perm == other.perm and self.endpoints == other.endpoints

    def __repr__(self) -> str:
        return f"EdgeOrdering({list(self.perm)})"


def complement(g: Graph) -> Graph:
    """Complement graph with unit weights; edges listed in lexicographic order."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``keep`` relabelled to ``0..k-1``; also returns the label map."""
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v], w) for u, v, w in g.edges if u in index and v in index
    ]
    vw = None
    if g.vertex_weights is not None:
        vw = [g.vertex_weights[v] for v in keep]
    return Graph(len(keep), edges, vw), list(keep)


# -- file formats -------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"`` or ``"u v w"``."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file: missing 'n m' header") from None
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must hold two integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count in header")
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'u v' or 'u v w', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphFormatError(f"line {lineno}: cannot parse {line!r}") from None
        edges.append((u, v, w, lineno))
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges but {len(edges)} were found")
    try:
        return Graph(n, [(u, v, w) for u, v, w, _ in edges])
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _format_weight(w: float) -> str:
    return repr(float(w))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v}" if w == 1.0 else f"{u} {v} {_format_weight(w)}")
    return "\n".join(lines)


def parse_ordering(text: str, n: int | None = None) -> Ordering:
    tokens = [t for _, line in _content_lines(text) for t in line.split()]
    try:
        order = Ordering(int(t) for t in tokens)
    except ValueError as exc:
        raise GraphFormatError(f"bad ordering: {exc}") from None
    if n is not None and len(order) != n:
        raise GraphFormatError(f"ordering lists {len(order)} vertices, expected {n}")
    return order


def serialize_ordering(order: Ordering) -> str:
    return " ".join(str(v) for v in order.perm)


def parse_vertex_weights(text: str, n: int) -> list[float]:
    weights: list[float | None] = [None] * n
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'v w', got {line!r}")
        try:
            v, w = int(parts[0]), float(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: cannot parse {line!r}") from None
        if not 0 <= v < n:
            raise GraphFormatError(f"line {lineno}: vertex {v} out of range")
        if weights[v] is not None:
            raise GraphFormatError(f"line {lineno}: vertex {v} weighted twice")
        if not math.isfinite(w) or w <= 0:
            raise GraphFormatError(f"line {lineno}: weight must be positive")
        weights[v] = w
    missing = [v for v, w in enumerate(weights) if w is None]
    if missing:
        raise GraphFormatError(f"no weight given for vertices {missing[:5]}")
    return weights  # type: ignore[return-value]


def serialize_vertex_weights(weights: Sequence[float]) -> str:
    return "\n".join(f"{v} {_format_weight(w)}" for v, w in enumerate(weights))


def parse_names(text: str) -> dict[int, str]:
    """Names sidecar: one ``"id label"`` per line."""
    names = {}
    for lineno, line in _content_lines(text):
        parts = line.split(maxsplit=1)
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'id label'")
        try:
            names[int(parts[0])] = parts[1]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex id {parts[0]!r}") from None
    return names
