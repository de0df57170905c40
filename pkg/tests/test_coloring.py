from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wheelfree import named
from wheelfree.coloring import (ColoringStats, NotBipartite, OutOfClass, konig_edge_color,
                                three_color_wheel_free_planar, three_edge_color_almost_chordless,
                                verify_edge_coloring, verify_vertex_coloring)
from wheelfree.core import Graph, delete_vertices, subdivide_all
from wheelfree.corpus import (degree2_augment, random_bipartite, random_subdivided_subcubic,
                              ring_of_blocks)
from wheelfree.oracle import chromatic_number_bf, edge_chromatic_bf
from wheelfree.patterns import BudgetExhausted, is_almost_chordless, is_chordless
from wheelfree.structure import generate, glue

from conftest import graphs


def test_konig_examples():
    c4 = konig_edge_color(named.cycle_graph(4))
    assert sorted(set(c4.values())) == [1, 2]
    claw = konig_edge_color(named.claw())
    assert sorted(claw.values()) == [1, 2, 3]
    s = subdivide_all(named.complete_graph(4))
    col = konig_edge_color(s)
    assert verify_edge_coloring(s, col, 3) and set(col.values()) == {1, 2, 3}
    with pytest.raises(NotBipartite):
        konig_edge_color(named.cycle_graph(5))


def test_edge3_examples():
    stats = ColoringStats()
    d = named.diamond()
    col = three_edge_color_almost_chordless(d, stats)
    assert len(col) == 5 and verify_edge_coloring(d, col, 3)
    s = subdivide_all(named.complete_graph(4))
    stats.reset()
    assert verify_edge_coloring(s, three_edge_color_almost_chordless(s, stats), 3)
    assert stats.rules == {"R4": 1}
    c5 = named.cycle_graph(5)
    col = three_edge_color_almost_chordless(c5, stats)
    assert verify_edge_coloring(c5, col, 3) and len(set(col.values())) == 3
    assert stats.edge_fallbacks == 0


def test_edge3_preconditions():
    with pytest.raises(ValueError):
        three_edge_color_almost_chordless(named.star(4))
    with pytest.raises(ValueError):
        three_edge_color_almost_chordless(named.complete_graph(4))


def test_edge3_two_edge_cut_rule():
    # two subdivided K4s, each missing one subdivision vertex, joined by two disjoint edges
    s = subdivide_all(named.complete_graph(4))
    half, _ = delete_vertices(s, [4])  # drops the subdivision vertex of edge 0-1
    k = half.n
    g = Graph.from_edges(2 * k, half.edges() + [(a + k, b + k) for a, b in half.edges()]
                         + [(0, k), (1, k + 1)])
    assert is_chordless(g)
    stats = ColoringStats()
    col = three_edge_color_almost_chordless(g, stats)
    assert verify_edge_coloring(g, col, 3)
    assert stats.rules["R3"] >= 1 and stats.edge_fallbacks == 0


def test_vertex3_examples():
    stats = ColoringStats()
    p = named.prism()
    col = three_color_wheel_free_planar(p, stats=stats)
    assert verify_vertex_coloring(p, col, 3) and len(set(col.values())) == 3
    c5 = named.cycle_graph(5)
    assert verify_vertex_coloring(c5, three_color_wheel_free_planar(c5), 3)
    g = glue(p, (0, 1, 2), p, (3, 4, 5))
    stats.reset()
    col = three_color_wheel_free_planar(g, stats=stats)
    assert verify_vertex_coloring(g, col, 3) and chromatic_number_bf(g) == 3
    assert stats.rules["S1"] >= 1


def test_vertex3_rejects_out_of_class():
    with pytest.raises(OutOfClass) as exc:
        three_color_wheel_free_planar(named.wheel_graph(5))
    assert exc.value.witness is not None and exc.value.witness.center == 5
    with pytest.raises(OutOfClass):
        three_color_wheel_free_planar(named.complete_bipartite(3, 3))
    with pytest.raises(BudgetExhausted):
        three_color_wheel_free_planar(named.octahedron(), budget=0.0)


def test_vertex3_two_cut_rule():
    stats = ColoringStats()
    rng = random.Random(5)
    for _ in range(10):
        g = ring_of_blocks(rng, rng.randint(2, 4))
        assert verify_vertex_coloring(g, three_color_wheel_free_planar(g, stats=stats), 3)
    assert stats.rules["S4"] >= 10
    assert stats.vertex_fallbacks == 0 and stats.edge_fallbacks == 0


def test_verify_examples():
    p = named.prism()
    assert verify_vertex_coloring(p, three_color_wheel_free_planar(p))
    assert not verify_vertex_coloring(named.complete_graph(3), {0: 1, 1: 1, 2: 2})
    assert verify_vertex_coloring(Graph.empty(3), {0: 7, 1: 7, 2: 7})
    with pytest.raises(ValueError):
        verify_vertex_coloring(p, {0: 1})
    with pytest.raises(ValueError):
        verify_edge_coloring(p, {(0, 1): 1})
    assert not verify_edge_coloring(named.path_graph(3), {(0, 1): 1, (1, 2): 1})
    assert not verify_vertex_coloring(named.path_graph(2), {0: 1, 1: 4}, 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_konig_uses_exactly_delta_colors(seed):
    g = random_bipartite(random.Random(seed))
    col = konig_edge_color(g)
    assert verify_edge_coloring(g, col, g.max_degree())
    assert len(set(col.values())) == g.max_degree()


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8, max_degree=3))
def test_edge3_on_almost_chordless_subcubic(g):
    if not is_almost_chordless(g):
        return
    stats = ColoringStats()
    col = three_edge_color_almost_chordless(g, stats)
    assert verify_edge_coloring(g, col, 3)
    assert edge_chromatic_bf(g, 3) is not None


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_edge3_on_subdivided_graphs_needs_no_fallback(seed):
    g = random_subdivided_subcubic(random.Random(seed))
    stats = ColoringStats()
    assert verify_edge_coloring(g, three_edge_color_almost_chordless(g, stats), 3)
    assert stats.edge_fallbacks == 0


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from(["K4", "prism", "cube", "K23"]), min_size=1, max_size=3),
       st.integers(0, 2), st.integers(0, 10_000))
def test_vertex3_on_generated_members(names, glues, seed):
    rng = random.Random(seed)
    g = degree2_augment(generate(names, glues, rng), rng)
    stats = ColoringStats()
    assert verify_vertex_coloring(g, three_color_wheel_free_planar(g, stats=stats), 3)
    assert stats.vertex_fallbacks == 0 and stats.edge_fallbacks == 0
