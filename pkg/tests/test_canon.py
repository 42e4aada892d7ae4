"""Canonical forms: equality must coincide with graph isomorphism."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import networkx as nx

from absgraph.canon import (CanonicalForm, canonical_form, canonical_graph,
                            canonical_graph6, canonical_labeling, is_isomorphic)
from absgraph.families import build_complete, build_path
from absgraph.graph import from_edges, relabel, to_graph6


def _mask_graph(n, bits):
    edges = []
    pos = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits >> pos & 1:
                edges.append((u, v))
            pos += 1
    return from_edges(n, edges)


def _all_labeled(n):
    for bits in range(2 ** (n * (n - 1) // 2)):
        yield _mask_graph(n, bits)


def test_eleven_classes_on_four_vertices():
    # classic count of all graphs (connected or not) on 4 vertices
    assert len({canonical_form(g) for g in _all_labeled(4)}) == 11


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4)])
def test_small_class_counts(n, count):
    assert len({canonical_form(g) for g in _all_labeled(n)}) == count


def test_relabeling_never_changes_the_form():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    base = canonical_form(g)
    for perm in itertools.permutations(range(5)):
        assert canonical_form(relabel(g, perm)) == base


def test_five_cycle_is_self_complementary():
    c5 = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    comp = from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
    assert is_isomorphic(c5, comp)
    assert not is_isomorphic(c5, build_path(5))


def test_canonical_graph_is_a_fixed_point():
    g = from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5)])
    cg = canonical_graph(g)
    assert canonical_graph(cg).adj == cg.adj
    assert is_isomorphic(g, cg)
    assert canonical_graph6(g) == to_graph6(cg)


def test_canonical_labeling_maps_onto_the_form():
    g = from_edges(5, [(0, 4), (4, 2), (2, 1), (1, 3)])
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(5))
    assert relabel(g, lab).adj == canonical_graph(g).adj


def test_form_decodes_back_to_its_graph():
    g = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    form = canonical_form(g)
    assert isinstance(form, CanonicalForm)
    assert canonical_form(form.to_graph()) == form


def test_complete_and_empty_special_cases():
    for n in (1, 2, 5, 9):
        kn = build_complete(n)
        assert canonical_graph(kn).adj == kn.adj
        en = from_edges(n, [])
        assert canonical_graph(en).adj == en.adj
        assert not is_isomorphic(kn, en) or n == 1


@settings(max_examples=60)
@given(st.data())
def test_relabel_pairs_are_isomorphic(data):
    n = data.draw(st.integers(2, 8))
    bits = data.draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    perm = data.draw(st.permutations(range(n)))
    g = _mask_graph(n, bits)
    h = relabel(g, tuple(perm))
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_verdict_matches_networkx(data):
    n = data.draw(st.integers(2, 7))
    top = 2 ** (n * (n - 1) // 2) - 1
    g = _mask_graph(n, data.draw(st.integers(0, top)))
    h = _mask_graph(n, data.draw(st.integers(0, top)))
    ours = is_isomorphic(g, h)
    theirs = nx.is_isomorphic(nx.Graph(list(g.edges()) + [(v, v) for v in range(n)]),
                              nx.Graph(list(h.edges()) + [(v, v) for v in range(n)]))
    assert ours == theirs


def test_different_orders_never_isomorphic():
    assert not is_isomorphic(build_path(3), build_path(4))
