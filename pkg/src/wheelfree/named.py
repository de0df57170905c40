"""Small named graphs used as seeds, fixtures and reference patterns."""

from __future__ import annotations

from itertools import combinations

from .core import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (length n-1)."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return complete_bipartite(1, k)


def wheel_graph(k: int) -> Graph:
    """Rim C_k on 0..k-1 plus the center k adjacent to every rim vertex."""
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(i, k) for i in range(k)])


def claw() -> Graph:
    return star(3)


def diamond() -> Graph:
    """K4 minus the edge 2-3; the middle edge is 0-1."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def butterfly() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def paw() -> Graph:
    """Triangle 0-1-2 with pendant 3 on vertex 0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def prism() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5, rungs i-(i+3)."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                                (0, 3), (1, 4), (2, 5)])


def cube() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)
                                if v < v ^ (1 << b)])


def octahedron() -> Graph:
    """K_{2,2,2}: vertex i is non-adjacent only to i^1."""
    return Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if v != u ^ 1])


def circulant(n: int, connections: list[int]) -> Graph:
    edges = set()
    for i in range(n):
        for c in connections:
            j = (i + c) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def pentagonal_prism() -> Graph:
    ring = [(i, (i + 1) % 5) for i in range(5)]
    return Graph.from_edges(10, ring + [(a + 5, b + 5) for a, b in ring] + [(i, i + 5) for i in range(5)])
