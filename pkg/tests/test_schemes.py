import numpy as np
import pytest

from arglab.constructions import im_c_matrices, paley_2class_scheme, paley_graph
from arglab.errors import NotApplicable, SchemeAxiomViolation
from arglab.graph_core import cycle_graph, hypercube
from arglab.schemes import (
    intersection_numbers,
    scheme_diagram,
    scheme_from_q_regular_graph,
    signature_relations,
    verify_c1c2_identity,
    verify_scheme,
)
from arglab.verifiers import expected_quotient
from oracles import SIGS, adjacency_lists, all_distances


def test_paley_two_class_scheme():
    s = paley_2class_scheme(7)
    sch = verify_scheme([np.eye(7, dtype=np.int64), s.a1, s.a2])
    assert sch.classes == 2 and not sch.symmetric and sch.commutative
    assert intersection_numbers(sch)[1][2][0] == 3
    assert sch.valencies() == [1, 3, 3]


def test_trivial_scheme():
    n = 5
    sch = verify_scheme([np.eye(n, dtype=np.int64), np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)])
    assert sch.classes == 1 and sch.symmetric
    assert sch.p[1][1][0] == n - 1 and sch.p[1][1][1] == n - 2


def test_srg_scheme_and_non_srg_witness():
    a = paley_graph(13).adjacency.astype(np.int64)
    i = np.eye(13, dtype=np.int64)
    sch = verify_scheme([i, a, 1 - i - a])
    assert sch.p[1][1][1] == 2 and sch.p[1][1][2] == 3
    c = cycle_graph(6).adjacency.astype(np.int64)
    with pytest.raises(SchemeAxiomViolation) as info:
        verify_scheme([np.eye(6, dtype=np.int64), c, 1 - np.eye(6, dtype=np.int64) - c])
    assert info.value.witness[0] == "iv"


def test_axiom_failures():
    i = np.eye(3, dtype=np.int64)
    j = np.ones((3, 3), dtype=np.int64)
    with pytest.raises(SchemeAxiomViolation) as info:
        verify_scheme([j - i, i])
    assert info.value.witness[0] == "i"
    with pytest.raises(SchemeAxiomViolation) as info:
        verify_scheme([i, j])
    assert info.value.witness[0] == "ii"
    r1 = np.array([[0, 1, 1], [1, 0, 0], [0, 0, 0]])
    with pytest.raises(SchemeAxiomViolation) as info:
        verify_scheme([i, r1, j - i - r1])
    assert info.value.witness[0] == "iii"


@pytest.mark.parametrize("n", [7, 11, 19])
def test_c1c2_identity(n):
    c = im_c_matrices(paley_2class_scheme(n))
    assert verify_c1c2_identity(c)
    broken = c.c1.copy()
    broken[0, 1] ^= 1
    c_bad = type(c)(c.n, c.c0, broken, c.c2, c.c3)
    assert not verify_c1c2_identity(c_bad)


def test_signature_scheme_q5(pipeline_graphs):
    g = pipeline_graphs[("taylor-paley", 5)]
    sch = scheme_from_q_regular_graph(g)
    assert sch.classes == 5 and sch.symmetric and sch.commutative
    assert sch.valencies() == [1, 5, 10, 5, 2, 1]
    # oracle: p_{1,1}^k counted pairwise from BFS distances
    nbrs = adjacency_lists(g.adjacency.tolist())
    dist = all_distances(nbrs)
    anti = [next(y for y in range(g.n) if dist[x][y] == 4) for x in range(g.n)]
    rel = [[SIGS.index((dist[x][y], dist[anti[x]][y])) for y in range(g.n)] for x in range(g.n)]
    for k in range(6):
        x, y = next((x, y) for x in range(g.n) for y in range(g.n) if rel[x][y] == k)
        count = sum(1 for z in range(g.n) if rel[x][z] == 1 and rel[z][y] == 1)
        assert sch.p[1][1][k] == count
    assert sch.p[1][1][2] == 2


@pytest.mark.parametrize("key", [("taylor-paley", 5), ("taylor-peisert", 9), ("im", 7), ("im", 11)])
def test_signature_scheme_products(pipeline_graphs, key):
    g = pipeline_graphs[key]
    sch = scheme_from_q_regular_graph(g)
    f = sch.relations
    for i in range(6):
        for j in range(6):
            rhs = sum(sch.p[i][j][k] * f[k] for k in range(6))
            assert np.array_equal(f[i] @ f[j], rhs)
    k = int(g.degrees()[0])
    assert scheme_diagram(sch, 1) == expected_quotient(k)


def test_signature_relations_partition(pipeline_graphs):
    rels = signature_relations(pipeline_graphs[("im", 7)])
    assert np.array_equal(sum(rels), np.ones((32, 32), dtype=np.int64))
    assert np.array_equal(rels[0], np.eye(32, dtype=np.int64))


def test_scheme_not_applicable():
    with pytest.raises(NotApplicable):
        scheme_from_q_regular_graph(hypercube(5))


def test_report_shape(pipeline_graphs):
    rep = scheme_from_q_regular_graph(pipeline_graphs[("im", 7)]).report()
    assert rep["classes"] == 5 and rep["symmetric"] is True
    assert len(rep["p"]) == 6 and len(rep["p"][0][0]) == 6


@pytest.mark.parametrize("n", [7, 11, 19, 23])
def test_c_matrices_form_three_class_scheme(n):
    sch = verify_scheme(im_c_matrices(paley_2class_scheme(n)).matrices())
    assert sch.classes == 3 and sch.commutative and not sch.symmetric
    assert sch.valencies() == [1, n, n, 1]
