import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discut.graph import (GraphFormatError, build_graph, connected_components,
                          gen_complete, gen_even_cycle, gen_gnp,
                          gen_random_bipartite, is_bipartite, load_edge_list,
                          max_degree, serialize_edge_list)


def test_load_edge_list_undirected():
    g = load_edge_list("# n=3 directed=0\n0 1\n1 2\n")
    assert g.n == 3 and g.m == 2 and not g.directed
    assert g.adj[1] == (0, 2)


def test_load_edge_list_directed():
    g = load_edge_list("# n=2 directed=1\n0 1\n")
    assert g.directed and g.m == 1
    assert g.adj[0] == (1,) and g.adj[1] == ()
    assert g.in_adj[1] == (0,)


def test_load_rejects_self_loop():
    with pytest.raises(GraphFormatError, match="self-loop"):
        load_edge_list("# n=2 directed=0\n0 0\n")


def test_load_rejects_duplicates():
    with pytest.raises(GraphFormatError, match="duplicate"):
        load_edge_list("# n=3 directed=0\n0 1\n1 0\n")


def test_load_reports_line_numbers():
    with pytest.raises(GraphFormatError, match="line 3"):
        load_edge_list("# n=3 directed=0\n0 1\nnot an edge\n")


def test_load_requires_header():
    with pytest.raises(GraphFormatError, match="header"):
        load_edge_list("0 1\n")


def test_serialize_roundtrip():
    g = gen_gnp(15, 0.3, 99)
    g2 = load_edge_list(serialize_edge_list(g))
    assert g2.n == g.n and g2.m == g.m and g2.adj == g.adj


def test_serialize_roundtrip_directed():
    g = gen_gnp(12, 0.3, 7, directed=True)
    g2 = load_edge_list(serialize_edge_list(g))
    assert g2.directed and g2.adj == g.adj and g2.in_adj == g.in_adj


def test_gnp_extremes():
    assert gen_gnp(5, 0.0, 1).m == 0
    assert gen_gnp(5, 1.0, 1).m == 10


def test_gnp_edge_count_within_four_sigma():
    # C(100,2) * 0.1 Bernoulli edges: mean 495, sigma = sqrt(4950*0.1*0.9).
    g = gen_gnp(100, 0.1, 7)
    mean, sigma = 495.0, (4950 * 0.1 * 0.9) ** 0.5
    assert abs(g.m - mean) <= 4 * sigma


def test_gnp_deterministic():
    assert gen_gnp(40, 0.2, 5).adj == gen_gnp(40, 0.2, 5).adj


def test_even_cycle():
    assert gen_even_cycle(4).m == 4
    assert gen_even_cycle(6).m == 6
    with pytest.raises(ValueError):
        gen_even_cycle(5)


def test_bipartite_generator():
    assert gen_random_bipartite(1, 1, 1.0, 0).m == 1
    assert gen_random_bipartite(3, 3, 1.0, 0).m == 9
    g = gen_random_bipartite(20, 20, 0.3, 5)
    assert is_bipartite(g)
    assert g.bipartition == frozenset(range(20))


def test_max_degree():
    assert max_degree(gen_complete(5)) == 4
    assert max_degree(gen_even_cycle(4)) == 2
    assert max_degree(build_graph(3, [])) == 0


def test_connected_components():
    assert connected_components(gen_even_cycle(4)) == [[0, 1, 2, 3]]
    two_edges = build_graph(4, [(0, 1), (2, 3)])
    assert connected_components(two_edges) == [[0, 1], [2, 3]]
    assert connected_components(build_graph(3, [])) == [[0], [1], [2]]


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 30), p=st.floats(0, 1), seed=st.integers(0, 2**32),
       directed=st.booleans())
def test_gnp_is_simple(n, p, seed, directed):
    g = gen_gnp(n, p, seed, directed=directed)
    for v in range(n):
        assert v not in g.adj[v]
        assert len(set(g.adj[v])) == len(g.adj[v])
    if not directed:
        for u in range(n):
            for v in g.adj[u]:
                assert u in g.adj[v]
