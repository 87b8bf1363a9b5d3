"""Association scheme axioms, intersection numbers and the 5-class scheme."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constructions import CMatrixSet
from .errors import ArglabError, MalformedInstance, NotApplicable, SchemeAxiomViolation
from .graph_core import SIGNATURES, Graph, QuotientMatrix, VertexPartition, antipode_map, equitable_check


@dataclass(frozen=True, eq=False)
class AssociationScheme:
    relations: tuple[np.ndarray, ...]
    p: tuple  # p[i][j][k], nested tuples of ints
    symmetric: bool
    commutative: bool

    @property
    def order(self) -> int:
        return self.relations[0].shape[0]

    @property
    def classes(self) -> int:
        return len(self.relations) - 1

    def valencies(self) -> list[int]:
        return [int(f[0].sum()) for f in self.relations]

    def report(self) -> dict:
        return {
            "classes": self.classes,
            "symmetric": self.symmetric,
            "valencies": self.valencies(),
            "p": [[list(row) for row in pi] for pi in self.p],
        }


def verify_scheme(rels: Sequence[np.ndarray]) -> AssociationScheme:
    """Check the four axioms by direct matrix products.

    Violations raise SchemeAxiomViolation with witness (axiom, indices, position).
    """
    mats = [np.asarray(f, dtype=np.int64) for f in rels]
    if not mats:
        raise SchemeAxiomViolation("no relations", ("shape", (), None))
    n = mats[0].shape[0]
    for i, f in enumerate(mats):
        if f.shape != (n, n) or not np.isin(f, (0, 1)).all():
            raise SchemeAxiomViolation(f"relation {i} is not an n x n 0/1 matrix", ("shape", (i,), None))
        if not f.any():
            raise SchemeAxiomViolation(f"relation {i} is empty", ("shape", (i,), None))

    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(mats[0], eye):
        pos = tuple(int(t) for t in np.argwhere(mats[0] != eye)[0])
        raise SchemeAxiomViolation("F_0 is not the identity", ("i", (0,), pos))

    total = sum(mats)
    if not (total == 1).all():
        pos = tuple(int(t) for t in np.argwhere(total != 1)[0])
        raise SchemeAxiomViolation("relations do not sum to J", ("ii", (), pos))

    for i, f in enumerate(mats):
        if not any(np.array_equal(f.T, g) for g in mats):
            raise SchemeAxiomViolation(f"transpose of F_{i} is not a relation", ("iii", (i,), None))

    # relation index of each position, for reading p_ij^k off F_i F_j
    label = sum(k * f for k, f in enumerate(mats))
    m = len(mats)
    p = []
    for i in range(m):
        pi = []
        for j in range(m):
            prod = mats[i] @ mats[j]
            row = []
            for k in range(m):
                vals = prod[label == k]
                bad = np.flatnonzero(vals != vals[0])
                if bad.size:
                    pos = tuple(int(t) for t in np.argwhere(label == k)[bad[0]])
                    raise SchemeAxiomViolation(
                        f"F_{i} F_{j} is not constant on the support of F_{k}",
                        ("iv", (i, j, k), pos),
                    )
                row.append(int(vals[0]))
            pi.append(tuple(row))
        p.append(tuple(pi))
    p = tuple(p)
    symmetric = all(np.array_equal(f, f.T) for f in mats)
    commutative = all(p[i][j] == p[j][i] for i in range(m) for j in range(m))
    return AssociationScheme(tuple(mats), p, symmetric, commutative)


def intersection_numbers(s: AssociationScheme) -> tuple:
    return s.p


def verify_c1c2_identity(c: CMatrixSet) -> bool:
    """C1 C2 == C2 C1 == n C0 + (n-1)/2 (C1 + C2), exactly."""
    n = c.n
    rhs = 2 * n * c.c0 + (n - 1) * (c.c1 + c.c2)
    return bool(np.array_equal(2 * (c.c1 @ c.c2), rhs) and np.array_equal(2 * (c.c2 @ c.c1), rhs))


def signature_relations(g: Graph) -> list[np.ndarray]:
    """R_0..R_5 given by (d(x, y), d(x', y)) in the order of SIGNATURES."""
    antipode = antipode_map(g)
    d = g.dist.dist
    d_anti = d[antipode]  # row x holds d(x', y)
    rels = []
    for a, b in SIGNATURES:
        rels.append(((d == a) & (d_anti == b)).astype(np.int64))
    covered = sum(rels)
    if not (covered == 1).all():
        x, y = (int(t) for t in np.argwhere(covered != 1)[0])
        raise MalformedInstance(
            f"pair ({x},{y}) has signature ({d[x, y]},{d_anti[x, y]})", (x, y)
        )
    return rels


def scheme_from_q_regular_graph(g: Graph) -> AssociationScheme:
    from .verifiers import q_regular_check

    try:
        q_regular_check(g)
    except ArglabError as exc:
        raise NotApplicable(f"graph is not Q-regular: {exc}", exc.witness) from exc
    try:
        return verify_scheme(signature_relations(g))
    except SchemeAxiomViolation as exc:
        raise MalformedInstance(str(exc), exc.witness) from exc


def scheme_diagram(s: AssociationScheme, relation: int, x: int = 0) -> QuotientMatrix:
    """Distribution diagram of the relation graph of R_relation w.r.t. {R_j(x)}."""
    g = Graph(s.relations[relation].astype(np.uint8))
    labels = np.zeros(s.order, dtype=np.int64)
    for j, f in enumerate(s.relations):
        labels[f[x] == 1] = j
    return equitable_check(g, VertexPartition.from_labels(labels.tolist()))
