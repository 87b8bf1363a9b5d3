"""Paley, Peisert and Paley-digraph families and the two doubling pipelines.

Vertices of every graph over GF(q) are field elements in encoding order.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import CongruenceError, DeskScaleExceeded, InvalidOrder
from .finite_field import Field, PrimePower, make_field
from .graph_core import (
    Digraph,
    Graph,
    bipartite_double,
    cartesian_product,
    complete_graph,
    taylor_extension,
)

DEFAULT_MAX_Q = 4096


def max_q() -> int:
    return int(os.environ.get("ARGLAB_MAX_Q", DEFAULT_MAX_Q))


def _field(q: int) -> Field:
    if q > max_q():
        raise DeskScaleExceeded(f"q={q} exceeds the desk-scale limit {max_q()} (set ARGLAB_MAX_Q)")
    return make_field(PrimePower.from_order(q))


def _cayley(f: Field, connection: np.ndarray) -> np.ndarray:
    """``A[x, y] = 1`` iff x - y lies in the connection set (boolean per encoding)."""
    return connection[f.difference_table()].astype(np.uint8)


def _squares(f: Field) -> np.ndarray:
    sq = np.zeros(f.q, dtype=bool)
    for a in range(1, f.q):
        sq[a] = f.is_square(a)
    return sq


def paley_graph(q: int) -> Graph:
    if q % 4 != 1:
        raise CongruenceError(f"Paley graph needs q = 1 mod 4, got q={q}")
    f = _field(q)
    return Graph(_cayley(f, _squares(f)))


def peisert_graph(q: int) -> Graph:
    pp = PrimePower.from_order(q)
    if pp.p % 4 != 3 or pp.r % 2 != 0 or q < 5:
        raise CongruenceError(f"Peisert graph needs q = p^r, p = 3 mod 4, r even; got {pp.p}^{pp.r}")
    f = _field(q)
    classes = f.class_lookup(f.quartic_class)
    return Graph(_cayley(f, (classes == 0) | (classes == 1)))


def paley_digraph(q: int) -> Digraph:
    """Arc a -> b iff b - a is a nonzero square."""
    if q % 4 != 3 or q < 7:
        raise CongruenceError(f"Paley digraph needs q = 3 mod 4 and q >= 7, got q={q}")
    f = _field(q)
    # _cayley gives [x, y] -> x - y; the arc a -> b needs b - a, hence the transpose
    return Digraph(_cayley(f, _squares(f)).T)


@dataclass(frozen=True, eq=False)
class TwoClassScheme:
    n: int
    a1: np.ndarray
    a2: np.ndarray


def paley_2class_scheme(q: int) -> TwoClassScheme:
    a1 = paley_digraph(q).adjacency.astype(np.int64)
    return TwoClassScheme(q, a1, a1.T.copy())


@dataclass(frozen=True, eq=False)
class CMatrixSet:
    n: int
    c0: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    c3: np.ndarray

    def matrices(self) -> list[np.ndarray]:
        return [self.c0, self.c1, self.c2, self.c3]


def im_c_matrices(s: TwoClassScheme) -> CMatrixSet:
    """Assemble C_1 in 4x4 block form (sizes 1, n, n, 1) from a 2-class scheme."""
    n = s.n
    if n < 5 or n % 2 == 0:
        raise InvalidOrder(f"scheme order must be odd and >= 5, got {n}")
    size = 2 * (n + 1)
    top, mid, bot, last = 0, slice(1, n + 1), slice(n + 1, 2 * n + 1), 2 * n + 1
    c1 = np.zeros((size, size), dtype=np.int64)
    c1[top, mid] = 1
    c1[mid, mid] = s.a1
    c1[mid, bot] = s.a2
    c1[mid, last] = 1
    c1[bot, top] = 1
    c1[bot, mid] = s.a2
    c1[bot, bot] = s.a1
    c1[last, bot] = 1
    c0 = np.eye(size, dtype=np.int64)
    c2 = c1.T.copy()
    c3 = np.ones((size, size), dtype=np.int64) - c0 - c1 - c2
    return CMatrixSet(n, c0, c1, c2, c3)


def graph_from_biadjacency(b: np.ndarray) -> Graph:
    """Rows become vertices ``0..r-1``, columns ``r..r+c-1``."""
    b = np.asarray(b, dtype=np.uint8)
    r, c = b.shape
    return Graph(np.block([[np.zeros((r, r), np.uint8), b], [b.T, np.zeros((c, c), np.uint8)]]))


def im_pipeline(q: int) -> Graph:
    return graph_from_biadjacency(im_c_matrices(paley_2class_scheme(q)).c1)


def taylor_bd_pipeline(kind: str, q: int) -> Graph:
    """Bipartite double of the Taylor extension of P(q) or P*(q)."""
    if kind == "paley":
        base = paley_graph(q)
    elif kind == "peisert":
        base = peisert_graph(q)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return bipartite_double(taylor_extension(base))


# Base line of the Fano plane over Z_7 (the quadratic residues).
FANO_BASE = (1, 2, 4)


def lambda_design() -> list[tuple[int, ...]]:
    """Blocks of the square 2-(7,4,2) design: complements of the Fano lines."""
    return [
        tuple(sorted(set(range(7)) - {(i + b) % 7 for b in FANO_BASE}))
        for i in range(7)
    ]


def lambda_14() -> Graph:
    from .designs import IncidenceStructure, incidence_graph

    return incidence_graph(IncidenceStructure(tuple(range(7)), tuple(lambda_design())))


def k2_box_lambda() -> Graph:
    return cartesian_product(complete_graph(2), lambda_14())
