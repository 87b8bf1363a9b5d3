"""Dense simple graphs and digraphs, distances and the standard operations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ..errors import InvalidEdge, NotAntipodal, NotHalfCaseSrg, SameVertex

# Marker for unreachable pairs in a DistanceTable.
UNREACHABLE = -1


class _AdjacencyMixin:
    adjacency: np.ndarray

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adjacency, other.adjacency))

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))


class Graph(_AdjacencyMixin):
    """Simple undirected graph on vertices ``0..n-1`` (0/1 uint8 adjacency)."""

    def __init__(self, adjacency):
        a = np.array(adjacency, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidEdge("adjacency must be a square matrix")
        if a.size and a.max() > 1:
            raise InvalidEdge("adjacency must be 0/1")
        if np.any(np.diag(a)):
            raise InvalidEdge("loops are not allowed", int(np.flatnonzero(np.diag(a))[0]))
        if not np.array_equal(a, a.T):
            raise InvalidEdge("adjacency must be symmetric")
        a.flags.writeable = False
        self.adjacency = a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)

    def neighbors(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[x])

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    @cached_property
    def common_counts(self) -> np.ndarray:
        """``M[x, y]`` = number of common neighbours of x and y."""
        a = self.adjacency.astype(np.int64)
        return a @ a

    @cached_property
    def dist(self) -> "DistanceTable":
        return distances(self)


class Digraph(_AdjacencyMixin):
    """Loopless directed graph; ``adjacency[a, b] == 1`` is an arc a -> b."""

    def __init__(self, adjacency):
        a = np.array(adjacency, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidEdge("adjacency must be a square matrix")
        if a.size and a.max() > 1:
            raise InvalidEdge("adjacency must be 0/1")
        if np.any(np.diag(a)):
            raise InvalidEdge("loops are not allowed")
        a.flags.writeable = False
        self.adjacency = a

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={int(self.adjacency.sum())})"

    def arcs(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(self.adjacency)
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def out_neighbors(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[x])


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    a = np.zeros((n, n), dtype=np.uint8)
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"invalid edge ({u}, {v}) for n={n}", (u, v))
        a[u, v] = a[v, u] = 1
    return Graph(a)


def digraph_from_arcs(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    a = np.zeros((n, n), dtype=np.uint8)
    for e in arcs:
        u, v = int(e[0]), int(e[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"invalid arc ({u}, {v}) for n={n}", (u, v))
        a[u, v] = 1
    return Digraph(a)


# --- small standard graphs -----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8))


def empty_graph(n: int) -> Graph:
    return Graph(np.zeros((n, n), dtype=np.uint8))


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(m: int) -> Graph:
    """The m-cube on bitmasks ``0..2**m - 1``."""
    if m < 1:
        raise ValueError("dimension must be >= 1")
    n = 1 << m
    return from_edges(n, [(x, x ^ (1 << i)) for x in range(n) for i in range(m) if x < x ^ (1 << i)])


# --- distances -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """All-pairs hop distances; ``UNREACHABLE`` marks different components."""

    dist: np.ndarray

    @property
    def connected(self) -> bool:
        return not bool(np.any(self.dist == UNREACHABLE))

    @property
    def diameter(self) -> int | None:
        """Largest distance, or None when the graph is disconnected."""
        if not self.connected:
            return None
        return int(self.dist.max()) if self.dist.size else 0

    def layer(self, x: int, i: int) -> np.ndarray:
        return np.flatnonzero(self.dist[x] == i)

    def __call__(self, x: int, y: int) -> int:
        return int(self.dist[x, y])


def distances(g: Graph | Digraph) -> DistanceTable:
    """Breadth-first search from every vertex at once (frontier matrix products)."""
    n = g.n
    a = g.adjacency.astype(np.float32)
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    d = 0
    while frontier.any():
        d += 1
        frontier = ((frontier.astype(np.float32) @ a) > 0) & ~reached
        dist[frontier] = d
        reached |= frontier
    dist.flags.writeable = False
    return DistanceTable(dist)


class BipartiteResult(NamedTuple):
    bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """2-colour by BFS parity; on failure return an odd cycle."""
    n = g.n
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    adj = [g.neighbors(x).tolist() for x in range(n)]
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        for u in queue:
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartiteResult(False, None, _odd_cycle(u, v, parent, depth))
    return BipartiteResult(True, tuple(color), None)


def _odd_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [v]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    return tuple(left + right[-2::-1])


def common_neighbors(g: Graph, x: int, y: int) -> set[int]:
    if x == y:
        raise SameVertex(f"common neighbours of {x} with itself", x)
    return set(np.flatnonzero(g.adjacency[x] & g.adjacency[y]).tolist())


# --- graph operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8) - g.adjacency)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, u) is numbered ``a * h.n + u``."""
    ig = np.eye(g.n, dtype=np.uint8)
    ih = np.eye(h.n, dtype=np.uint8)
    return Graph(np.kron(g.adjacency, ih) + np.kron(ig, h.adjacency))


def bipartite_double(g: Graph) -> Graph:
    """x+ is vertex x, x- is vertex n + x."""
    a = g.adjacency
    z = np.zeros_like(a)
    return Graph(np.block([[z, a], [a, z]]))


def taylor_double(g: Graph) -> Graph:
    """x^{+1} is vertex x, x^{-1} is vertex n + x.

    Same-sign copies carry the edges of g, opposite-sign copies carry the
    non-edges between distinct vertices.
    """
    a = g.adjacency
    n = g.n
    cross = np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8) - a
    return Graph(np.block([[a, cross], [cross, a]]))


def add_apex(g: Graph) -> Graph:
    """``{inf} + g``: a new last vertex adjacent to every vertex of g."""
    n = g.n
    a = np.zeros((n + 1, n + 1), dtype=np.uint8)
    a[:n, :n] = g.adjacency
    a[n, :n] = a[:n, n] = 1
    return Graph(a)


def taylor_extension(g: Graph) -> Graph:
    """Taylor double of ``{inf} + g`` for a strongly regular g with k = 2*mu."""
    from ..verifiers import strongly_regular_params
    from ..errors import ArglabError

    try:
        params = strongly_regular_params(g)
    except ArglabError as exc:
        raise NotHalfCaseSrg(f"not strongly regular: {exc}", exc.witness) from exc
    if params.k != 2 * params.mu:
        raise NotHalfCaseSrg(f"k={params.k} != 2*mu={2 * params.mu}", params)
    return taylor_double(add_apex(g))


def distance_graph(g: Graph, i: int) -> Graph:
    """The graph joining vertices at distance exactly i in g."""
    return Graph((g.dist.dist == i).astype(np.uint8))


def folded_graph(g: Graph) -> Graph:
    """Quotient of an antipodal graph by its fibres (ordered by least vertex)."""
    dt = g.dist
    d = dt.diameter
    if d is None or d < 2:
        raise NotAntipodal(f"antipodality needs a connected graph of diameter >= 2, got {d}")
    far = dt.dist == d
    fibre_of = [-1] * g.n
    fibres: list[list[int]] = []
    for x in range(g.n):
        if fibre_of[x] != -1:
            continue
        fibre = [x] + np.flatnonzero(far[x]).tolist()
        for y in fibre:
            if fibre_of[y] != -1 or sorted(fibre) != sorted([y] + np.flatnonzero(far[y]).tolist()):
                raise NotAntipodal("distance-d graph is not a union of cliques", (x, y))
            fibre_of[y] = len(fibres)
        fibres.append(sorted(fibre))
    m = len(fibres)
    ind = np.zeros((g.n, m), dtype=np.int64)
    ind[np.arange(g.n), fibre_of] = 1
    quotient = ind.T @ g.adjacency.astype(np.int64) @ ind
    a = (quotient > 0).astype(np.uint8)
    np.fill_diagonal(a, 0)
    return Graph(a)
