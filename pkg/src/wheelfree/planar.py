"""Planarity with a rotation-system certificate, face walks and triangle faces.

The planarity test itself is delegated to networkx (left-right algorithm);
whatever it returns is re-validated here by tracing faces and checking
Euler's formula on every component before it is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .connectivity import is_k_connected
from .core import Graph, connected_components


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """Rotation system: ``rotation[v]`` lists v's neighbors in cyclic order."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, ((v, w) for v, r in enumerate(self.rotation) for w in r))

    def face_walks(self) -> list[list[int]]:
        """Closed walks traced by: arrive at v from u, leave toward the successor of u."""
        pos = [{w: i for i, w in enumerate(r)} for r in self.rotation]
        for v, r in enumerate(self.rotation):
            for w in r:
                if v not in pos[w]:
                    raise EmbeddingError(f"rotation lists {v}-{w} on one side only")
        seen = set()
        walks = []
        for v, r in enumerate(self.rotation):
            for w in r:
                if (v, w) in seen:
                    continue
                walk = []
                dart = (v, w)
                while dart not in seen:
                    seen.add(dart)
                    a, b = dart
                    walk.append(a)
                    rb = self.rotation[b]
                    dart = (b, rb[(pos[b][a] + 1) % len(rb)])
                if dart != (v, w):
                    raise EmbeddingError("face traversal does not close up")
                walks.append(walk)
        return walks

    def euler_ok(self) -> bool:
        g = self.graph()
        try:
            walks = self.face_walks()
        except EmbeddingError:
            return False
        faces_per_vertex = {}
        for walk in walks:
            faces_per_vertex.setdefault(walk[0], 0)
            faces_per_vertex[walk[0]] += 1
        for comp in connected_components(g):
            nv = len(comp)
            ne = sum(g.degree(v) for v in comp) // 2
            nf = sum(faces_per_vertex.get(v, 0) for v in comp) if ne else 1
            if nv - ne + nf != 2:
                return False
        return True

    def lines(self) -> list[str]:
        return [f"{v}: " + " ".join(map(str, r)) for v, r in enumerate(self.rotation)]

    @classmethod
    def from_lines(cls, lines) -> Embedding:
        rows = {}
        for line in lines:
            if not line.strip():
                continue
            head, _, tail = line.partition(":")
            rows[int(head)] = tuple(int(x) for x in tail.split())
        return cls(tuple(rows.get(v, ()) for v in range(max(rows, default=-1) + 1)))


def planarity(g: Graph) -> Embedding | None:
    """A validated rotation system when g is planar, None otherwise."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        return None
    rotation = tuple(tuple(emb.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n))
    out = Embedding(rotation)
    if out.graph() != g or not out.euler_ok():
        raise EmbeddingError("planarity backend returned an invalid rotation system")
    return out


def is_planar(g: Graph) -> bool:
    return planarity(g) is not None


def _normalize(walk: list[int]) -> tuple[int, ...]:
    k = len(walk)
    candidates = []
    for seq in (walk, walk[::-1]):
        for i in range(k):
            candidates.append(tuple(seq[i:] + seq[:i]))
    return min(candidates)


def faces(emb: Embedding) -> list[tuple[int, ...]]:
    """Face walks, each rotated/reflected to its least form, sorted."""
    if not emb.euler_ok():
        raise EmbeddingError("rotation system fails the Euler check")
    return sorted(_normalize(w) for w in emb.face_walks())


def triangle_is_face(g: Graph, t) -> bool:
    """Whether the triangle t bounds a face of the 3-connected planar graph g."""
    a, b, c = sorted(t)
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise ValueError(f"{(a, b, c)} is not a triangle")
    if g.n < 4 or not is_k_connected(g, 3):
        raise ValueError("triangle_is_face needs a 3-connected graph")
    emb = planarity(g)
    if emb is None:
        raise ValueError("triangle_is_face needs a planar graph")
    return (a, b, c) in {f for f in faces(emb) if len(f) == 3}


def triangle_faces(g: Graph) -> list[tuple[int, int, int]]:
    """Triangular faces of a 3-connected planar graph (unique by Whitney)."""
    emb = planarity(g)
    if emb is None:
        raise ValueError("graph is not planar")
    return [f for f in faces(emb) if len(f) == 3]
