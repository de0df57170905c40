from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from wheelfree import named
from wheelfree.connectivity import (Almost3, biconnected_blocks, bridges, clique_cutset_atoms,
                                    connectivity_level, cut_vertices, disconnects,
                                    find_clique_cutset, is_almost_3_connected, is_k_connected,
                                    two_cuts)
from wheelfree.core import Graph, is_connected, subdivide_edge
from wheelfree.structure import glue, seed_catalog

from conftest import graphs


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_k_connected_examples():
    assert is_k_connected(named.complete_graph(4), 3)
    assert not is_k_connected(named.cycle_graph(5), 3)
    assert is_k_connected(named.prism(), 3)
    with pytest.raises(ValueError):
        is_k_connected(named.complete_graph(3), 3)


def test_clique_cutset_examples():
    cut = find_clique_cutset(named.butterfly())
    assert cut is not None and cut.clique == (0,)
    assert cut.certificate().startswith("CUTSET 0")
    assert find_clique_cutset(named.prism()) is None


def test_glued_triangle_is_found_as_cutset():
    p = named.prism()
    g = glue(p, (0, 1, 2), p, (0, 1, 2))
    cut = find_clique_cutset(g)
    assert cut is not None and cut.clique == (0, 1, 2)
    assert disconnects(g, cut.clique)


def test_almost_3_connected_examples():
    k4 = named.complete_graph(4)
    assert is_almost_3_connected(k4).kind is Almost3.THREE_CONNECTED
    v = is_almost_3_connected(subdivide_edge(k4, (0, 1)))
    assert v.kind is Almost3.SUBDIVISION_CASE and v.vertex == 4
    assert is_almost_3_connected(named.cycle_graph(6)).kind is Almost3.NO


def test_two_cuts_examples():
    assert two_cuts(named.cycle_graph(4)) == [(0, 2), (1, 3)]
    assert two_cuts(named.prism()) == []
    assert (0, 1) in two_cuts(named.diamond())
    with pytest.raises(ValueError):
        two_cuts(Graph.empty(2))


@pytest.mark.parametrize("k", range(4, 9))
def test_wheels_have_no_clique_cutset(k):
    assert find_clique_cutset(named.wheel_graph(k)) is None


@pytest.mark.parametrize("entry", [e for e in seed_catalog() if e.name != "K23"], ids=lambda e: e.name)
def test_subdividing_3_connected_gives_subdivision_case(entry):
    g = entry.basic
    for e in g.edges():
        assert is_almost_3_connected(subdivide_edge(g, e)).kind is Almost3.SUBDIVISION_CASE


@settings(max_examples=80)
@given(graphs(min_n=4, max_n=9))
def test_connectivity_matches_networkx(g):
    expected = nx.node_connectivity(_nx(g)) if is_connected(g) else 0
    assert connectivity_level(g) == min(expected, 3)


@given(graphs(max_n=9))
def test_blocks_bridges_cut_vertices_match_networkx(g):
    h = _nx(g)
    assert sorted(cut_vertices(g)) == sorted(nx.articulation_points(h))
    assert sorted(bridges(g)) == sorted(tuple(sorted(e)) for e in nx.bridges(h))
    ours = sorted(sorted(b) for b in biconnected_blocks(g) if len(b) >= 2)
    theirs = sorted(sorted(b) for b in nx.biconnected_components(h))
    assert ours == theirs


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=9))
def test_clique_cutset_is_a_real_cutset(g):
    cut = find_clique_cutset(g)
    if cut is None:
        return
    assert all(g.has_edge(a, b) for a, b in combinations(cut.clique, 2))
    assert len(cut.components) >= 2
    assert disconnects(g, cut.clique) or not is_connected(g)


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=8))
def test_atoms_cover_all_edges(g):
    atoms = [set(a) for a in clique_cutset_atoms(g)]
    for u, v in g.edges():
        assert any(u in a and v in a for a in atoms)
    for a in atoms:
        sub = [(u, v) for u, v in g.edges() if u in a and v in a]
        assert is_connected(Graph.from_edges(len(a), [(sorted(a).index(u), sorted(a).index(v)) for u, v in sub]))
