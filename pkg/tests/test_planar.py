from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from wheelfree import named
from wheelfree.connectivity import is_k_connected
from wheelfree.core import Graph, is_connected
from wheelfree.corpus import random_subcubic
from wheelfree.linegraph import line_graph
from wheelfree.planar import (Embedding, EmbeddingError, faces, is_planar, planarity,
                              triangle_faces, triangle_is_face)

from conftest import graphs


def test_planarity_examples():
    assert len(faces(planarity(named.complete_graph(4)))) == 4
    assert planarity(named.complete_graph(5)) is None
    assert len(faces(planarity(named.prism()))) == 5
    assert not is_planar(named.complete_bipartite(3, 3))


def test_face_census():
    assert [len(f) for f in faces(planarity(named.complete_graph(4)))] == [3, 3, 3, 3]
    assert [len(f) for f in faces(planarity(named.cycle_graph(4)))] == [4, 4]
    assert sorted(len(f) for f in faces(planarity(named.prism()))) == [3, 3, 4, 4, 4]


def test_embedding_text_round_trip():
    emb = planarity(named.cube())
    assert Embedding.from_lines(emb.lines()) == emb


def test_inconsistent_rotation_rejected():
    # K4 with one rotation reversed is not a planar embedding
    emb = planarity(named.complete_graph(4))
    bad = Embedding((tuple(reversed(emb.rotation[0])),) + emb.rotation[1:])
    assert not bad.euler_ok()
    with pytest.raises(EmbeddingError):
        faces(bad)


def test_triangle_is_face_examples():
    k4 = named.complete_graph(4)
    assert all(triangle_is_face(k4, t) for t in combinations(range(4), 3))
    assert triangle_is_face(named.prism(), (0, 1, 2))
    assert triangle_is_face(named.prism(), (3, 4, 5))
    # every triangle of the octahedron bounds a face
    oct_ = named.octahedron()
    tris = [t for t in combinations(range(6), 3) if all(oct_.has_edge(a, b) for a, b in combinations(t, 2))]
    assert len(tris) == 8 and all(triangle_is_face(oct_, t) for t in tris)


def test_separating_triangle_is_not_a_face():
    # octahedron with a vertex stacked inside one face: the old face now separates
    oct_ = named.octahedron()
    t = triangle_faces(oct_)[0]
    g = Graph.from_edges(7, oct_.edges() + [(v, 6) for v in t])
    assert not triangle_is_face(g, t)


def test_triangle_is_face_preconditions():
    with pytest.raises(ValueError):
        triangle_is_face(named.prism(), (0, 1, 3))
    with pytest.raises(ValueError):
        triangle_is_face(named.butterfly(), (0, 1, 2))
    with pytest.raises(ValueError):
        triangle_is_face(named.complete_graph(5), (0, 1, 2))


@settings(max_examples=100)
@given(graphs(max_n=9))
def test_euler_on_every_embedding(g):
    emb = planarity(g)
    if emb is None:
        return
    assert emb.euler_ok()
    assert emb.graph() == g


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=9))
def test_faces_of_2_connected_graphs_are_cycles(g):
    if not is_k_connected(g, 2):
        return
    emb = planarity(g)
    if emb is None:
        return
    for f in faces(emb):
        assert len(set(f)) == len(f)


def test_line_graph_planarity_consistency_sweep():
    rng = random.Random(8)
    for _ in range(200):
        h = random_subcubic(rng.randint(4, 14), rng)
        if h.m == 0:
            continue
        assert is_planar(h) == is_planar(line_graph(h)[0])
