"""Graph value type, construction operators, and the two text codecs."""

import pytest
from hypothesis import given, strategies as st

import networkx as nx

from absgraph.graph import (Graph, add_edge, complement, delete_vertex,
                            disjoint_union, empty_graph, from_edge_list_text,
                            from_edges, from_graph6, induced_subgraph, join,
                            parse_graph, relabel, to_edge_list_text, to_graph6)


def _mask_graph(n: int, bits: int) -> Graph:
    edges = []
    pos = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits >> pos & 1:
                edges.append((u, v))
            pos += 1
    return from_edges(n, edges)


def test_empty_and_basic_accessors():
    g = empty_graph(4)
    assert g.n == 4 and g.m == 0
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g.degree(1) == 2
    assert g.degree_sequence() == (1, 1, 2, 2)
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert sorted(g.neighbors(1)) == [0, 2]


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        empty_graph(0)
    with pytest.raises(ValueError):
        empty_graph(65)


def test_add_edge_is_functional():
    g = empty_graph(3)
    h = add_edge(g, 0, 2)
    assert g.m == 0 and h.m == 1
    with pytest.raises(ValueError):
        add_edge(h, 2, 0)


def test_complement_and_union_and_join():
    p3 = from_edges(3, [(0, 1), (1, 2)])
    c = complement(p3)
    assert sorted(c.edges()) == [(0, 2)]
    u = disjoint_union(p3, empty_graph(2))
    assert u.n == 5 and u.m == 2
    j = join(empty_graph(2), empty_graph(3))
    assert j.n == 5 and j.m == 6  # K_{2,3}
    assert j.degree_sequence() == (2, 2, 2, 3, 3)


def test_relabel_permutes_edges():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    h = relabel(g, (3, 2, 1, 0))
    assert sorted(h.edges()) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        relabel(g, (0, 0, 1, 2))


def test_induced_subgraph_and_delete():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h = induced_subgraph(g, [0, 1, 2])
    assert h.n == 3 and sorted(h.edges()) == [(0, 1), (1, 2)]
    d = delete_vertex(g, 2)
    assert d.n == 4 and d.m == 3


def test_graph6_known_strings():
    # from the format's reference examples: K_4 minus an edge etc.
    assert to_graph6(empty_graph(1)) == "@"
    k2 = from_edges(2, [(0, 1)])
    assert to_graph6(k2) == "A_"
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert from_graph6(to_graph6(p4)).adj == p4.adj


def test_graph6_header_and_errors():
    p4 = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    s = to_graph6(p4)
    assert from_graph6(">>graph6<<" + s).adj == p4.adj
    with pytest.raises(ValueError):
        from_graph6(s + "!")
    with pytest.raises(ValueError):
        from_graph6(s[:-1])
    with pytest.raises(ValueError):
        from_graph6("")


@given(st.data())
def test_graph6_round_trip(data):
    n = data.draw(st.integers(1, 12))
    bits = data.draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    g = _mask_graph(n, bits)
    assert from_graph6(to_graph6(g)).adj == g.adj


@given(st.data())
def test_graph6_agrees_with_networkx(data):
    n = data.draw(st.integers(1, 10))
    bits = data.draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    g = _mask_graph(n, bits)
    theirs = nx.from_graph6_bytes(to_graph6(g).encode())
    assert set(theirs.nodes) == set(range(n))
    assert {tuple(sorted(e)) for e in theirs.edges} == set(g.edges())
    ours = from_graph6(nx.to_graph6_bytes(theirs, header=False).decode().strip())
    assert ours.adj == g.adj


def test_large_order_graph6():
    g = empty_graph(63)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s).n == 63


def test_edge_list_round_trip():
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)])
    text = to_edge_list_text(g)
    assert text.splitlines()[0] == "4"
    assert from_edge_list_text(text).adj == g.adj


def test_edge_list_comments_and_errors():
    g = from_edge_list_text("# a path\n3\n0 1\n\n1 2\n")
    assert g.n == 3 and g.m == 2
    with pytest.raises(ValueError):
        from_edge_list_text("3\n0 1 2\n")
    with pytest.raises(ValueError):
        from_edge_list_text("x\n0 1\n")
    with pytest.raises(ValueError):
        from_edge_list_text("")


def test_parse_graph_auto_detection():
    g = parse_graph("3\n0 1\n1 2\n")
    assert g.m == 2
    h = parse_graph(to_graph6(g))
    assert h.adj == g.adj
    assert parse_graph(to_graph6(g), fmt="graph6").adj == g.adj
