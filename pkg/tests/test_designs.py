import itertools
import json

import numpy as np
import pytest

from arglab.constructions import lambda_14, lambda_design
from arglab.designs import (
    IncidenceStructure,
    design_from_json,
    design_json_decode,
    design_json_encode,
    dual_property_check,
    dual_structure,
    gdd_check,
    gdd_from_graph,
    incidence_graph,
    replication_numbers,
)
from arglab.errors import InvalidPartition, MalformedJson, NotApplicable, NotGdd
from arglab.graph_core import hypercube
from oracles import adjacency_lists, all_distances


def test_incidence_graph_of_lambda_design():
    s = IncidenceStructure(tuple(range(7)), tuple(lambda_design()))
    assert incidence_graph(s) == lambda_14()


def test_incidence_graph_single_block():
    g = incidence_graph(IncidenceStructure((0,), ((0,),)))
    assert sorted(g.edges()) == [(0, 1)]


def test_fano_incidence_graph_is_heawood():
    lines = tuple(tuple(sorted((i + b) % 7 for b in (1, 2, 4))) for i in range(7))
    g = incidence_graph(IncidenceStructure(tuple(range(7)), lines))
    nbrs = adjacency_lists(g.adjacency.tolist())
    assert all(len(a) == 3 for a in nbrs)
    dist = all_distances(nbrs)
    assert max(max(r) for r in dist) == 3
    # girth 6: no two vertices share two common neighbours and no edge lies in a triangle
    for x, y in itertools.combinations(range(14), 2):
        assert len(set(nbrs[x]) & set(nbrs[y])) <= 1
    assert all(dist[x][y] % 2 == (0 if (x < 7) == (y < 7) else 1) for x in range(14) for y in range(14))


def test_dual_structure():
    s = IncidenceStructure((0, 1, 2), ((0, 1), (1, 2)))
    d = dual_structure(s)
    assert d.points == (0, 1)
    assert d.blocks == ((0,), (0, 1), (1,))
    assert dual_structure(d).blocks == s.blocks
    lab = IncidenceStructure((0, 1), ((0, 1),), ("z",))
    assert dual_structure(lab).points == ("z",)


def _gdd_2_2_2_0_1():
    # points {0,1} | {2,3}; blocks are the four transversals
    s = IncidenceStructure((0, 1, 2, 3), ((0, 2), (0, 3), (1, 2), (1, 3)))
    return s, ((0, 1), (2, 3))


def test_gdd_check():
    s, groups = _gdd_2_2_2_0_1()
    d = gdd_check(s, groups, (2, 2, 2, 0, 1))
    assert d.params == (2, 2, 2, 0, 1)
    with pytest.raises(NotGdd) as info:
        gdd_check(s, groups, (2, 2, 2, 0, 2))
    assert info.value.witness[0] == "pair"
    with pytest.raises(InvalidPartition):
        gdd_check(s, ((0, 1), (1, 2, 3)), (2, 2, 2, 0, 1))
    with pytest.raises(InvalidPartition):
        gdd_check(s, ((0, 1),), (2, 2, 2, 0, 1))
    with pytest.raises(NotGdd):
        gdd_check(s, ((0, 2), (1, 3)), (2, 2, 2, 0, 1))


def test_dual_property_small():
    s, groups = _gdd_2_2_2_0_1()
    ok, grouping = dual_property_check(gdd_check(s, groups, (2, 2, 2, 0, 1)))
    assert ok and sorted(grouping) == [(0, 3), (1, 2)]
    doubled = IncidenceStructure(s.points, s.blocks + s.blocks)
    d2 = gdd_check(doubled, groups, (2, 2, 2, 0, 2))
    assert dual_property_check(d2) == (False, None)


def test_dual_property_with_declared_grouping():
    s, groups = _gdd_2_2_2_0_1()
    d = gdd_check(s, groups, (2, 2, 2, 0, 1))
    assert dual_property_check(d, ((0, 3), (1, 2)))[0]
    assert not dual_property_check(d, ((0, 1), (2, 3)))[0]


@pytest.mark.parametrize("key", [("taylor-paley", 5), ("taylor-paley", 13), ("taylor-peisert", 9), ("im", 7), ("im", 11)])
def test_gdd_from_pipeline(pipeline_graphs, key):
    g = pipeline_graphs[key]
    k = int(g.degrees()[0])
    d = gdd_from_graph(g, 0)
    assert d.params == (2, k + 1, k, 0, (k - 1) // 2)
    assert len(d.base.points) == 2 * k + 2 and len(d.base.blocks) == 2 * k + 2
    assert len(set(d.base.blocks)) == len(d.base.blocks)
    assert set(replication_numbers(d.base)) == {k}
    ok, grouping = dual_property_check(d)
    assert ok
    # each block Gamma(z) is paired with Gamma(z') for the antipode z'
    dist = g.dist.dist
    labels = d.base.block_labels
    for a, b in grouping:
        assert dist[labels[a], labels[b]] == 4


@pytest.mark.parametrize("key", [("taylor-paley", 5), ("im", 7)])
def test_incidence_graph_identifies_with_source(pipeline_graphs, key):
    g = pipeline_graphs[key]
    d = gdd_from_graph(g, 0)
    h = incidence_graph(d.base)
    vertex = list(d.base.points) + list(d.base.block_labels)
    assert sorted(vertex) == list(range(g.n))
    for u, v in h.edges():
        assert g.adjacency[vertex[u], vertex[v]]
    assert h.num_edges == g.num_edges


def test_gdd_independent_of_base_vertex(pipeline_graphs):
    g = pipeline_graphs[("taylor-paley", 5)]
    for x in range(g.n):
        assert gdd_from_graph(g, x).params == (2, 6, 5, 0, 2)


def test_gdd_from_graph_not_applicable():
    with pytest.raises(NotApplicable):
        gdd_from_graph(hypercube(5), 0)


def test_json_round_trip(pipeline_graphs):
    d = gdd_from_graph(pipeline_graphs[("im", 7)], 0)
    text = design_json_encode(d)
    back = design_from_json(text)
    assert back.params == d.params
    assert design_json_encode(back) == text
    obj = json.loads(text)
    assert obj["points"] == 16 and len(obj["blocks"]) == 16


def test_json_malformed():
    good = {"points": 4, "groups": [[0, 1], [2, 3]], "blocks": [[0, 2], [0, 3], [1, 2], [1, 3]], "params": [2, 2, 2, 0, 1]}
    assert design_from_json(json.dumps(good)).params == (2, 2, 2, 0, 1)
    for key in good:
        bad = dict(good)
        del bad[key]
        with pytest.raises(MalformedJson):
            design_json_decode(json.dumps(bad))
    with pytest.raises(MalformedJson):
        design_json_decode("{")
    with pytest.raises(MalformedJson):
        design_json_decode(json.dumps(dict(good, blocks=[[0, 9]])))
    with pytest.raises(MalformedJson):
        design_json_decode(json.dumps(dict(good, params=[2, 2])))
    # well-formed but not a GDD
    with pytest.raises(NotGdd):
        design_from_json(json.dumps(dict(good, blocks=[])))


def test_incidence_matrix_rows_are_replication():
    s = IncidenceStructure(tuple(range(7)), tuple(lambda_design()))
    n = s.incidence_matrix()
    assert np.array_equal(n.sum(axis=1), replication_numbers(s))
    assert np.array_equal(n @ n.T, 2 * np.ones((7, 7), dtype=np.int64) + 2 * np.eye(7, dtype=np.int64))
