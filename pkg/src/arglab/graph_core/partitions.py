"""Vertex partitions, quotient matrices and the antipodal signature partition."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import (
    InvalidPartition,
    MalformedInstance,
    NoUniqueAntipode,
    NotApplicable,
    NotEquitable,
)
from .graph import Graph

# Cell order of the signature partition: (d(x, y), d(x', y)) with x' the antipode.
SIGNATURES: tuple[tuple[int, int], ...] = ((0, 4), (1, 3), (2, 2), (3, 1), (3, 3), (4, 0))


@dataclass(frozen=True)
class VertexPartition:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = [False] * self.n
        for i, cell in enumerate(self.cells):
            if not cell:
                raise InvalidPartition(f"cell {i} is empty", i)
            for v in cell:
                if not 0 <= v < self.n:
                    raise InvalidPartition(f"vertex {v} out of range", v)
                if seen[v]:
                    raise InvalidPartition(f"vertex {v} appears twice", v)
                seen[v] = True
        if not all(seen):
            raise InvalidPartition("cells do not cover the vertex set", seen.index(False))

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(n, tuple(tuple(sorted(int(v) for v in c)) for c in cells))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """Cells ordered by label value."""
        order = sorted(set(labels))
        cells = [[v for v, lab in enumerate(labels) if lab == c] for c in order]
        return cls.from_cells(len(labels), cells)

    def __len__(self) -> int:
        return len(self.cells)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def indicator(self) -> np.ndarray:
        ind = np.zeros((self.n, len(self.cells)), dtype=np.int64)
        for j, cell in enumerate(self.cells):
            ind[list(cell), j] = 1
        return ind


@dataclass(frozen=True)
class QuotientMatrix:
    """Cell-to-cell neighbour counts of an equitable partition."""

    entries: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def double_count_ok(self) -> bool:
        """p_i * q_ij == p_j * q_ji for all cells i, j."""
        p, q = self.cell_sizes, self.entries
        m = len(p)
        return all(p[i] * q[i][j] == p[j] * q[j][i] for i in range(m) for j in range(m))

    def to_dict(self) -> dict:
        return {"cell_sizes": list(self.cell_sizes), "entries": [list(r) for r in self.entries]}

    def canonical_bytes(self) -> bytes:
        return json.dumps(self.to_dict(), separators=(",", ":")).encode()


def equitable_check(g: Graph, part: VertexPartition) -> QuotientMatrix:
    """Quotient matrix of ``part``; raises NotEquitable with (vertex, cell, count, expected)."""
    if part.n != g.n:
        raise InvalidPartition(f"partition of {part.n} vertices for a graph on {g.n}")
    counts = g.adjacency.astype(np.int64) @ part.indicator()
    rows = []
    for i, cell in enumerate(part.cells):
        block = counts[list(cell)]
        bad = np.flatnonzero(np.any(block != block[0], axis=1))
        if bad.size:
            v = cell[int(bad[0])]
            j = int(np.flatnonzero(block[bad[0]] != block[0])[0])
            raise NotEquitable(
                f"vertex {v} in cell {i} has {counts[v, j]} neighbours in cell {j}, "
                f"vertex {cell[0]} has {block[0, j]}",
                (v, j, int(counts[v, j]), int(block[0, j])),
            )
        rows.append(tuple(int(c) for c in block[0]))
    return QuotientMatrix(tuple(rows), part.sizes())


def distance_partition(g: Graph, x: int) -> VertexPartition:
    """Cells Gamma_0(x), Gamma_1(x), ... of a connected graph."""
    row = g.dist.dist[x]
    if np.any(row < 0):
        raise InvalidPartition("graph is disconnected")
    return VertexPartition.from_labels(row.tolist())


def antipode_map(g: Graph) -> list[int]:
    """The pairing x -> x' with x' the unique vertex at distance 4 from x."""
    dt = g.dist
    if dt.diameter != 4:
        raise NotApplicable(f"antipode map needs a connected graph of diameter 4, got {dt.diameter}")
    far = dt.dist == 4
    counts = far.sum(axis=1)
    bad = np.flatnonzero(counts != 1)
    if bad.size:
        x = int(bad[0])
        raise NoUniqueAntipode(x, int(counts[x]))
    return [int(y) for y in np.argmax(far, axis=1)]


def signature_partition(g: Graph, x: int, antipode: Sequence[int] | None = None) -> VertexPartition:
    """Six cells grouping y by (d(x, y), d(x', y)), in the order of SIGNATURES."""
    if antipode is None:
        antipode = antipode_map(g)
    d = g.dist.dist
    xp = antipode[x]
    index = {s: i for i, s in enumerate(SIGNATURES)}
    cells: list[list[int]] = [[] for _ in SIGNATURES]
    for y in range(g.n):
        sig = (int(d[x, y]), int(d[xp, y]))
        if sig not in index:
            raise MalformedInstance(f"vertex {y} has unexpected signature {sig}", (x, y, sig))
        cells[index[sig]].append(y)
    for i, cell in enumerate(cells):
        if not cell:
            raise MalformedInstance(f"signature cell {SIGNATURES[i]} is empty", (x, SIGNATURES[i]))
    return VertexPartition.from_cells(g.n, cells)
