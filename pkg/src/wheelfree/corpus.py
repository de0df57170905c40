"""Random instance families for sweeps and property tests."""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

from .core import Graph, edge, subdivide_all
from .patterns import find_wheel
from .planar import is_planar
from .structure import glue_chain, seed_catalog


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_subcubic(n: int, rng: random.Random, density: float = 1.0) -> Graph:
    """Greedy random graph with maximum degree 3; ``density`` scales the edge attempts."""
    deg = [0] * n
    edges: set = set()
    for _ in range(int(density * 3 * n)):
        u, v = rng.sample(range(n), 2) if n > 1 else (0, 0)
        e = edge(u, v)
        if u != v and e not in edges and deg[u] < 3 and deg[v] < 3:
            edges.add(e)
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def random_subdivided_subcubic(rng: random.Random, max_n: int = 40) -> Graph:
    """Full subdivision of a random subcubic graph, kept within ``max_n`` vertices."""
    while True:
        h = random_subcubic(rng.randint(2, 16), rng, rng.uniform(0.5, 1.5))
        if h.m and h.n + h.m <= max_n:
            return subdivide_all(h)


def random_bipartite(rng: random.Random, max_n: int = 20) -> Graph:
    a = rng.randint(1, max_n - 1)
    b = rng.randint(1, max_n - a)
    p = rng.uniform(0.1, 0.9)
    edges = [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p]
    if not edges:
        edges = [(0, a)]
    return Graph.from_edges(a + b, edges)


def gluing_corpus(max_pieces: int = 3, rng: int = 0) -> list[tuple[tuple[str, ...], Graph]]:
    """One gluing per multiset of catalog seeds with 2..max_pieces pieces."""
    names = [e.name for e in seed_catalog()]
    out = []
    for k in range(2, max_pieces + 1):
        for combo in combinations_with_replacement(names, k):
            out.append((combo, glue_chain(combo, random.Random(f"{rng}:{combo}"))))
    return out


def degree2_augment(g: Graph, rng: random.Random, steps: int = 3,
                    budget: float | None = 5.0) -> Graph:
    """Add degree-2 vertices: ears on edges or edge subdivisions, keeping planarity and wheel-freeness."""
    for _ in range(steps):
        u, v = rng.choice(g.edges())
        z = g.n
        if rng.random() < 0.5:
            cand = Graph.from_edges(z + 1, g.edges() + [(u, z), (v, z)])
        else:
            cand = Graph.from_edges(z + 1, [e for e in g.edges() if e != (u, v)] + [(u, z), (v, z)])
        if is_planar(cand) and find_wheel(cand, budget) is None:
            g = cand
    return g


def ring_of_blocks(rng: random.Random, k: int = 2) -> Graph:
    """Line graph of the full subdivision of a cubic planar ring with 2-edge-cuts.

    Each block is a catalog cubic seed minus one edge; consecutive blocks are
    joined end to end, so the result has connectivity 2 and minimum degree 3.
    """
    from .linegraph import line_graph

    seeds = [e.seed for e in seed_catalog() if e.name != "K23"]
    edges: list = []
    ends = []
    offset = 0
    for _ in range(k):
        s = rng.choice(seeds)
        cut = rng.choice(s.edges())
        edges += [(a + offset, b + offset) for a, b in s.edges() if (a, b) != cut]
        ends.append((cut[0] + offset, cut[1] + offset))
        offset += s.n
    for i in range(k):
        edges.append((ends[i][1], ends[(i + 1) % k][0]))
    return line_graph(subdivide_all(Graph.from_edges(offset, edges)))[0]
