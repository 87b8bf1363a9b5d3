"""Incidence structures, group divisible designs and their extraction from graphs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .errors import ArglabError, InvalidPartition, MalformedJson, NotApplicable, NotGdd
from .graph_core import Graph, antipode_map


@dataclass(frozen=True)
class IncidenceStructure:
    """Points with an explicit label order; blocks are sorted tuples of labels.

    ``block_labels`` optionally names each block (e.g. the graph vertex z of
    an extracted block Gamma(z)).
    """

    points: tuple[Hashable, ...]
    blocks: tuple[tuple[Hashable, ...], ...]
    block_labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise InvalidPartition("repeated point label")
        for b in self.blocks:
            missing = [x for x in b if x not in pts]
            if missing:
                raise InvalidPartition(f"block {b} references unknown point {missing[0]}", b)
        if self.block_labels is not None and len(self.block_labels) != len(self.blocks):
            raise ValueError("one label per block required")

    def incidence_matrix(self) -> np.ndarray:
        """Points x blocks 0/1 matrix."""
        index = {x: i for i, x in enumerate(self.points)}
        n = np.zeros((len(self.points), len(self.blocks)), dtype=np.int64)
        for j, b in enumerate(self.blocks):
            for x in b:
                n[index[x], j] = 1
        return n


def incidence_graph(s: IncidenceStructure) -> Graph:
    """Points are vertices ``0..P-1`` and blocks ``P..P+B-1``, in list order."""
    from .constructions import graph_from_biadjacency

    return graph_from_biadjacency(s.incidence_matrix())


def dual_structure(s: IncidenceStructure) -> IncidenceStructure:
    """Blocks become points (labelled by block index, or block_labels if set)."""
    labels = s.block_labels if s.block_labels is not None else tuple(range(len(s.blocks)))
    n = s.incidence_matrix()
    blocks = tuple(tuple(labels[j] for j in np.flatnonzero(n[i])) for i in range(len(s.points)))
    return IncidenceStructure(labels, blocks, s.points)


@dataclass(frozen=True)
class Gdd:
    base: IncidenceStructure
    groups: tuple[tuple[Hashable, ...], ...]
    params: tuple[int, int, int, int, int]  # (n, m, k, lambda1, lambda2)


def _check_groups(points: Sequence[Hashable], groups: Sequence[Sequence[Hashable]]) -> dict:
    group_of = {}
    for gi, grp in enumerate(groups):
        for x in grp:
            if x in group_of:
                raise InvalidPartition(f"point {x} lies in two groups", x)
            group_of[x] = gi
    if set(group_of) != set(points):
        raise InvalidPartition("groups do not partition the point set")
    return group_of


def gdd_check(
    s: IncidenceStructure,
    groups: Sequence[Sequence[Hashable]],
    expected: Sequence[int],
) -> Gdd:
    """Verify group sizes, block sizes and both pair-coverage constants."""
    n, m, k, lam1, lam2 = expected
    group_of = _check_groups(s.points, groups)
    if len(groups) != m:
        raise NotGdd(f"{len(groups)} groups, expected {m}", ("groups", len(groups)))
    for grp in groups:
        if len(grp) != n:
            raise NotGdd(f"group {tuple(grp)} has size {len(grp)}, expected {n}", ("group", tuple(grp)))
    for b in s.blocks:
        if len(b) != k or len(set(b)) != k:
            raise NotGdd(f"block {b} does not have {k} distinct points", ("block", b))
    inc = s.incidence_matrix()
    cover = inc @ inc.T
    gid = np.array([group_of[x] for x in s.points])
    same = gid[:, None] == gid[None, :]
    np.fill_diagonal(same, False)
    cross = gid[:, None] != gid[None, :]
    for mask, want, kind in ((same, lam1, "within-group"), (cross, lam2, "cross-group")):
        bad = np.argwhere(mask & (cover != want))
        if bad.size:
            i, j = (int(t) for t in bad[0])
            pair = (s.points[i], s.points[j])
            raise NotGdd(
                f"{kind} pair {pair} lies in {cover[i, j]} blocks, expected {want}",
                ("pair", pair, int(cover[i, j])),
            )
    return Gdd(s, tuple(tuple(g) for g in groups), (n, m, k, lam1, lam2))


def gdd_from_graph(g: Graph, x: int) -> Gdd:
    """Points at even distance from x grouped in antipodal pairs; blocks Gamma(z), z odd."""
    from .verifiers import q_regular_check

    try:
        q_regular_check(g)
    except ArglabError as exc:
        raise NotApplicable(f"graph is not Q-regular: {exc}", exc.witness) from exc
    k = int(g.degrees()[0])
    d = g.dist.dist[x]
    antipode = antipode_map(g)
    points = tuple(int(y) for y in np.flatnonzero(d % 2 == 0))
    odd = [int(z) for z in np.flatnonzero(d % 2 == 1)]
    blocks = tuple(tuple(int(y) for y in g.neighbors(z)) for z in odd)
    groups = tuple(sorted({tuple(sorted((y, antipode[y]))) for y in points}))
    base = IncidenceStructure(points, blocks, tuple(odd))
    return gdd_check(base, groups, (2, k + 1, k, 0, (k - 1) // 2))


def replication_numbers(s: IncidenceStructure) -> list[int]:
    return s.incidence_matrix().sum(axis=1).tolist()


def dual_property_check(
    d: Gdd, grouping: Sequence[Sequence[int]] | None = None
) -> tuple[bool, tuple[tuple[int, ...], ...] | None]:
    """Look for a grouping of the blocks making the dual a GDD with equal parameters.

    Blocks are referred to by index. With ``grouping`` given, only that
    grouping is verified. Otherwise, when lambda1 != lambda2 the grouping is
    forced (two blocks share a dual group iff they meet in lambda1 points),
    so it is read off the block intersection sizes; for extracted designs
    this is the pairing Gamma(z) <-> Gamma(z').
    """
    n, m, k, lam1, lam2 = d.params
    nb = len(d.base.blocks)
    if grouping is None:
        if lam1 == lam2:
            return False, None
        inc = d.base.incidence_matrix()
        meet = inc.T @ inc
        np.fill_diagonal(meet, -1)
        seen: set[int] = set()
        found = []
        for j in range(nb):
            if j in seen:
                continue
            grp = (j,) + tuple(int(t) for t in np.flatnonzero(meet[j] == lam1))
            if any(t in seen for t in grp):
                return False, None
            seen.update(grp)
            found.append(tuple(sorted(grp)))
        grouping = tuple(found)
    else:
        grouping = tuple(tuple(int(t) for t in grp) for grp in grouping)
    dual = dual_structure(
        IncidenceStructure(d.base.points, d.base.blocks)  # block labels = indices
    )
    try:
        gdd_check(dual, grouping, (n, m, k, lam1, lam2))
    except (NotGdd, InvalidPartition):
        return False, None
    return True, grouping


# --- JSON ------------------------------------------------------------------------


def design_json_encode(d: Gdd) -> str:
    """Points are renumbered ``0..P-1`` in the order of ``d.base.points``."""
    index = {x: i for i, x in enumerate(d.base.points)}
    obj = {
        "points": len(d.base.points),
        "groups": [sorted(index[x] for x in grp) for grp in d.groups],
        "blocks": [sorted(index[x] for x in b) for b in d.base.blocks],
        "params": list(d.params),
    }
    return json.dumps(obj, separators=(",", ":"))


def _int_list(v) -> bool:
    return isinstance(v, list) and all(isinstance(t, int) and not isinstance(t, bool) for t in v)


def design_json_decode(text: str | bytes) -> tuple[IncidenceStructure, tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Return (structure, groups, params) without checking the GDD axioms."""
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"not JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedJson("top level must be an object")
    for key in ("points", "groups", "blocks", "params"):
        if key not in obj:
            raise MalformedJson(f"missing key {key!r}")
    npts = obj["points"]
    if not isinstance(npts, int) or isinstance(npts, bool) or npts < 0:
        raise MalformedJson("'points' must be a non-negative integer")
    if not (isinstance(obj["groups"], list) and all(_int_list(g) for g in obj["groups"])):
        raise MalformedJson("'groups' must be a list of integer lists")
    if not (isinstance(obj["blocks"], list) and all(_int_list(b) for b in obj["blocks"])):
        raise MalformedJson("'blocks' must be a list of integer lists")
    if not (_int_list(obj["params"]) and len(obj["params"]) == 5):
        raise MalformedJson("'params' must be five integers")
    try:
        s = IncidenceStructure(tuple(range(npts)), tuple(tuple(sorted(b)) for b in obj["blocks"]))
    except InvalidPartition as exc:
        raise MalformedJson(str(exc), exc.witness) from exc
    return s, tuple(tuple(g) for g in obj["groups"]), tuple(obj["params"])


def design_from_json(text: str | bytes) -> Gdd:
    s, groups, params = design_json_decode(text)
    return gdd_check(s, groups, params)
