"""Regularity checks, the Q-regularity test and the classifier.

Every check either returns the extracted parameters or raises an
``ArglabError`` whose ``witness`` names the offending vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .errors import (
    ArglabError,
    DiameterTooSmall,
    InfeasibleParameters,
    InvalidValency,
    NotAmplyRegular,
    NotApplicable,
    NotDistanceRegular,
    NotEquitable,
    NoUniqueAntipode,
    MalformedInstance,
    NotQRegular,
    NotRegular,
    NotSesquiRegular,
    NotStronglyRegular,
)
from .graph_core import (
    Graph,
    QuotientMatrix,
    antipode_map,
    complement,
    equitable_check,
    folded_graph,
    is_bipartite,
    signature_partition,
)


@dataclass(frozen=True)
class ArParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k < 1 or self.lam < 0 or self.mu < 0:
            raise InfeasibleParameters(f"bad parameters {self.as_tuple()}")
        if self.lam > self.k - 1 or self.mu > self.k:
            raise InfeasibleParameters(f"need lambda <= k-1 and mu <= k: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def __str__(self) -> str:
        return "({},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]  # b_0 .. b_{d-1}
    c: tuple[int, ...]  # c_1 .. c_d

    @property
    def k(self) -> int:
        return self.b[0]

    @property
    def diameter(self) -> int:
        return len(self.b)

    @property
    def a(self) -> tuple[int, ...]:
        """a_0 .. a_d."""
        bs = self.b + (0,)
        cs = (0,) + self.c
        return tuple(self.k - bi - ci for bi, ci in zip(bs, cs))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


def _regular_valency(g: Graph) -> int:
    deg = g.degrees()
    bad = np.flatnonzero(deg != deg[0])
    if bad.size:
        x = int(bad[0])
        raise NotRegular(f"vertex {x} has degree {deg[x]}, vertex 0 has {deg[0]}", (x, int(deg[x]), int(deg[0])))
    return int(deg[0])


def _constant_on(mask: np.ndarray, values: np.ndarray, what: str, exc=NotAmplyRegular) -> int | None:
    """Common value of ``values`` over ``mask`` (None if the mask is empty)."""
    xs, ys = np.nonzero(mask)
    if xs.size == 0:
        return None
    vals = values[xs, ys]
    bad = np.flatnonzero(vals != vals[0])
    if bad.size:
        i = int(bad[0])
        x, y = int(xs[i]), int(ys[i])
        x0, y0 = int(xs[0]), int(ys[0])
        raise exc(
            f"{what}: pair ({x},{y}) has {vals[i]} common neighbours, ({x0},{y0}) has {vals[0]}",
            {"pair": (x, y), "count": int(vals[i]), "reference": (x0, y0), "expected": int(vals[0])},
        )
    return int(vals[0])


def amply_regular_params(g: Graph) -> ArParams:
    dt = g.dist
    if not dt.connected:
        raise NotApplicable("graph is disconnected")
    if dt.diameter < 2:
        raise DiameterTooSmall(f"diameter {dt.diameter} < 2")
    k = _regular_valency(g)
    m = g.common_counts
    lam = _constant_on(g.adjacency.astype(bool), m, "lambda")
    mu = _constant_on(dt.dist == 2, m, "mu")
    return ArParams(g.n, k, 0 if lam is None else lam, mu)


def strongly_regular_params(g: Graph) -> ArParams:
    dt = g.dist
    if dt.diameter != 2:
        raise NotStronglyRegular(f"strongly regular check needs diameter 2, got {dt.diameter}")
    try:
        return amply_regular_params(g)
    except ArglabError as exc:
        raise NotStronglyRegular(str(exc), exc.witness) from exc


def distance_regular_array(g: Graph) -> IntersectionArray:
    dt = g.dist
    if not dt.connected:
        raise NotApplicable("graph is disconnected")
    d = dt.diameter
    a = g.adjacency.astype(np.int64)
    # counts[j][x, y] = number of neighbours of y at distance j from x
    counts = [((dt.dist == j).astype(np.int64) @ a) for j in range(d + 1)]
    b, c = [], []
    for i in range(d + 1):
        at_i = dt.dist == i
        if i >= 1:
            c.append(_constant_on(at_i, counts[i - 1], f"c_{i}", NotDistanceRegular))
        if i < d:
            b.append(_constant_on(at_i, counts[i + 1], f"b_{i}", NotDistanceRegular))
    return IntersectionArray(tuple(b), tuple(c))


def is_sesqui_regular(g: Graph) -> tuple[int, int, int]:
    dt = g.dist
    if not dt.connected or dt.diameter < 2:
        raise NotSesquiRegular(f"needs a connected graph of diameter >= 2, got {dt.diameter}")
    try:
        k = _regular_valency(g)
    except NotRegular as exc:
        raise NotSesquiRegular(str(exc), exc.witness) from exc
    mu = _constant_on(dt.dist == 2, g.common_counts, "mu", NotSesquiRegular)
    return (g.n, k, mu)


def is_02_graph(g: Graph) -> bool:
    if not g.dist.connected:
        return False
    m = g.common_counts.copy()
    np.fill_diagonal(m, 0)
    return bool(np.all((m == 0) | (m == 2)))


def expected_quotient(k: int) -> QuotientMatrix:
    """Quotient matrix of the six-cell signature partition for valency k."""
    if k < 5 or k % 2 == 0:
        raise InvalidValency(f"valency must be odd and >= 5, got {k}")
    h = (k - 1) // 2
    rows = (
        (0, k, 0, 0, 0, 0),
        (1, 0, k - 1, 0, 0, 0),
        (0, h, 0, h, 1, 0),
        (0, 0, k - 1, 0, 0, 1),
        (0, 0, k, 0, 0, 0),
        (0, 0, 0, k, 0, 0),
    )
    return QuotientMatrix(rows, (1, k, 2 * k, k, 2, 1))


def _half_case_params(g: Graph) -> ArParams:
    """Amply regular parameters with k odd >= 5, mu = (k-1)/2, diameter >= 4."""
    try:
        p = amply_regular_params(g)
    except ArglabError as exc:
        raise NotApplicable(f"not amply regular: {exc}", exc.witness) from exc
    if p.k < 5 or p.k % 2 == 0:
        raise NotApplicable(f"valency {p.k} is not odd >= 5", p)
    if 2 * p.mu != p.k - 1:
        raise NotApplicable(f"mu={p.mu} != (k-1)/2 for k={p.k}", p)
    if g.dist.diameter < 4:
        raise NotApplicable(f"diameter {g.dist.diameter} < 4", p)
    return p


def q_regular_check(g: Graph) -> QuotientMatrix:
    """Check every signature partition is equitable with the expected quotient."""
    p = _half_case_params(g)
    if g.dist.diameter != 4:
        raise NotApplicable(f"diameter {g.dist.diameter} != 4", p)
    target = expected_quotient(p.k)
    try:
        antipode = antipode_map(g)
    except NoUniqueAntipode as exc:
        raise NotQRegular(str(exc), {"vertex": exc.vertex, "antipodes": exc.count}) from exc
    for x in range(g.n):
        try:
            q = equitable_check(g, signature_partition(g, x, antipode))
        except (NotEquitable, MalformedInstance) as exc:
            raise NotQRegular(f"base vertex {x}: {exc}", {"vertex": x, "detail": exc.witness}) from exc
        if q != target:
            raise NotQRegular(
                f"base vertex {x}: quotient differs from the expected one",
                {"vertex": x, "quotient": q.to_dict()},
            )
    return target


def feasibility_diagnostics(p: ArParams, d: int) -> dict[str, Any]:
    """Check the b_1 >= (k+1)/3 bound (d >= 3) and mu <= k/2 (d >= 4)."""
    b1 = p.k - p.lam - 1
    checks = [
        {
            "name": "b1_lower_bound",
            "inequality": "b1 = k - lambda - 1 >= (k + 1)/3",
            "applies": d >= 3,
            "lhs": b1,
            "rhs": str(Fraction(p.k + 1, 3)),
            "holds": 3 * b1 >= p.k + 1,
        },
        {
            "name": "mu_at_most_half_k",
            "inequality": "mu <= k/2",
            "applies": d >= 4,
            "lhs": p.mu,
            "rhs": str(Fraction(p.k, 2)),
            "holds": 2 * p.mu <= p.k,
        },
    ]
    violations = [c["name"] for c in checks if c["applies"] and not c["holds"]]
    return {"params": list(p.as_tuple()), "diameter": d, "checks": checks,
            "violations": violations, "ok": not violations}


FIVE_CUBE = "FiveCube"
K2_BOX_LAMBDA = "K2BoxLambda"
GDD_INCIDENCE = "GddIncidence"
CONTRADICTION = "Contradiction"


@dataclass
class Classification:
    case: str
    evidence: dict[str, Any] = field(default_factory=dict)
    design: Any = None  # the extracted Gdd for GddIncidence


def classify(g: Graph) -> Classification:
    """Place g into one of the three cases of the classification, structurally.

    ``Contradiction`` means g meets the hypotheses but none of the cases,
    i.e. a counterexample.
    """
    p = _half_case_params(g)
    d = g.dist.diameter
    ev: dict[str, Any] = {"params": list(p.as_tuple()), "diameter": d}

    if d == 5:
        bip = bool(is_bipartite(g))
        ev["bipartite"] = bip
        try:
            folded = strongly_regular_params(folded_graph(g))
            ev["folded_srg"] = list(folded.as_tuple())
            ev["folded_complement_srg"] = list(strongly_regular_params(complement(folded_graph(g))).as_tuple())
        except ArglabError as exc:
            ev["folded_error"] = str(exc)
            return Classification(CONTRADICTION, ev)
        if p.as_tuple() == (32, 5, 0, 2) and bip and folded.as_tuple() == (16, 5, 0, 2):
            return Classification(FIVE_CUBE, ev)
        return Classification(CONTRADICTION, ev)

    if d == 4:
        try:
            q = q_regular_check(g)
        except NotQRegular as exc:
            ev["q_regular_witness"] = exc.witness
            far = (g.dist.dist == 4).sum(axis=1)
            ev["gamma4_sizes"] = sorted(set(int(c) for c in far))
            if p.as_tuple() == (28, 5, 0, 2):
                return Classification(K2_BOX_LAMBDA, ev)
            return Classification(CONTRADICTION, ev)
        from .designs import gdd_from_graph

        gdd = gdd_from_graph(g, 0)
        ev["quotient"] = q.to_dict()
        ev["gdd_params"] = list(gdd.params)
        return Classification(GDD_INCIDENCE, ev, gdd)

    return Classification(CONTRADICTION, ev)
