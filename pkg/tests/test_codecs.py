import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arglab.constructions import lambda_14, paley_digraph
from arglab.errors import MalformedGraph6, MalformedJson
from arglab.graph_core import (
    Graph,
    complete_graph,
    digraph6_decode,
    digraph6_encode,
    digraph_json_decode,
    digraph_json_encode,
    from_edges,
    graph6_decode,
    graph6_encode,
    graph_json_decode,
    graph_json_encode,
    hypercube,
    load_graph,
)


def random_graph(rng, n, p=0.4):
    a = np.triu(rng.random((n, n)) < p, 1).astype(np.uint8)
    return Graph(a + a.T)


def test_graph6_k2():
    # n = 2 -> chr(65) 'A'; the single bit 1 -> 0b100000 + 63 = 95 '_'
    assert graph6_encode(complete_graph(2)) == b"A_"


def test_graph6_roundtrip_hypercube():
    q5 = hypercube(5)
    assert graph6_decode(graph6_encode(q5)) == q5


def test_graph6_rejects_bad_bytes():
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"A" + bytes([40]))
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"D")  # 5 vertices need 2 data bytes
    with pytest.raises(MalformedGraph6):
        graph6_decode(b"")


def test_graph6_header_and_newline():
    assert graph6_decode(b">>graph6<<A_\n") == complete_graph(2)


@pytest.mark.parametrize("n", [0, 1, 5, 62, 63, 64, 130])
def test_graph6_matches_networkx(n):
    rng = np.random.default_rng(n)
    g = random_graph(rng, n)
    ours = graph6_encode(g)
    ref = nx.to_graph6_bytes(nx.from_numpy_array(g.adjacency), header=False).strip()
    assert ours == ref
    assert graph6_decode(ours) == g


def test_json_k2():
    assert json.loads(graph_json_encode(complete_graph(2))) == {"n": 2, "edges": [[0, 1]]}


def test_json_roundtrip_lambda():
    lam = lambda_14()
    text = graph_json_encode(lam)
    edges = json.loads(text)["edges"]
    assert edges == sorted(edges) and all(u < v for u, v in edges)
    assert graph_json_decode(text) == lam


@pytest.mark.parametrize(
    "bad",
    ['{"n":2,"edges":[[1,1]]}', '{"n":2}', '{"n":-1,"edges":[]}', '[1,2]', "not json",
     '{"n":2,"edges":[[0,1,2]]}', '{"n":2,"edges":[[0,5]]}', '{"n":true,"edges":[]}'],
)
def test_json_malformed(bad):
    with pytest.raises(MalformedJson):
        graph_json_decode(bad)


def test_load_graph_detects_format():
    g = hypercube(3)
    assert load_graph(graph6_encode(g)) == g
    assert load_graph(graph_json_encode(g)) == g


def test_digraph_codecs():
    d = paley_digraph(7)
    assert digraph6_decode(digraph6_encode(d)) == d
    assert digraph_json_decode(digraph_json_encode(d)) == d
    # single arc 0 -> 1: row-major bits 0,1,0,0 padded to 010000 = 16, + 63 = 'O'
    from arglab.graph_core import digraph_from_arcs

    assert digraph6_encode(digraph_from_arcs(2, [(0, 1)])) == b"&AO"
    with pytest.raises(MalformedGraph6):
        digraph6_decode(b"AO")


def test_codecs_mutually_consistent_random_corpus():
    rng = np.random.default_rng(2024)
    for trial in range(100):
        n = int(rng.integers(0, 40))
        g = random_graph(rng, n, p=float(rng.random()))
        via_g6 = graph6_decode(graph6_encode(g))
        via_json = graph_json_decode(graph_json_encode(g))
        assert via_g6 == g == via_json
        assert graph_json_encode(via_g6) == graph_json_encode(g)
        assert graph6_encode(via_json) == graph6_encode(g)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 20), st.data())
def test_graph6_roundtrip_property(n, data):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edges(n, [e for e, b in zip(pairs, bits) if b])
    assert graph6_decode(graph6_encode(g)) == g
    assert graph_json_decode(graph_json_encode(g)) == g
