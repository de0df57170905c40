"""Vertex connectivity, small cutsets and clique cutsets by brute force.

Graphs here stay small, so connectivity questions are answered by deleting
every candidate set and running a BFS over bitmasks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .core import Graph, connected_components, induced_subgraph, is_connected, mask_of, members


def _connected_mask(masks: tuple[int, ...], allowed: int) -> bool:
    if allowed == 0:
        return True
    seen = frontier = allowed & -allowed
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= masks[low.bit_length() - 1]
            f ^= low
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen == allowed


def disconnects(g: Graph, removed) -> bool:
    """True if deleting ``removed`` leaves a disconnected graph."""
    full = (1 << g.n) - 1
    return not _connected_mask(g.masks, full & ~mask_of(removed))


def is_k_connected(g: Graph, k: int) -> bool:
    if not 1 <= k <= 3:
        raise ValueError("k must be 1, 2 or 3")
    if g.n <= k:
        raise ValueError(f"k-connectivity needs more than {k} vertices (n={g.n})")
    full = (1 << g.n) - 1
    for size in range(k):
        for removed in combinations(range(g.n), size):
            if not _connected_mask(g.masks, full & ~mask_of(removed)):
                return False
    return True


def connectivity_level(g: Graph) -> int:
    """Largest k <= 3 with g k-connected (0 if disconnected or too small)."""
    level = 0
    for k in (1, 2, 3):
        if g.n <= k or not is_k_connected(g, k):
            break
        level = k
    return level


@dataclass(frozen=True)
class CliqueCutset:
    clique: tuple[int, ...]
    components: tuple[frozenset[int], ...]

    def certificate(self) -> str:
        return "CUTSET " + " ".join(map(str, self.clique))


def _cliques_of_size(g: Graph, size: int):
    if size == 1:
        for v in range(g.n):
            yield (v,)
    elif size == 2:
        yield from g.edges()
    elif size == 3:
        for u, v in g.edges():
            for w in sorted(g.adj[u] & g.adj[v]):
                if w > v:
                    yield (u, v, w)
    else:
        raise ValueError("clique sizes above 3 are not supported")


def find_clique_cutset(g: Graph, max_size: int = 3) -> CliqueCutset | None:
    """Smallest, then lexicographically least, clique whose removal disconnects g."""
    if not 1 <= max_size <= 3:
        raise ValueError("max_size must be 1, 2 or 3")
    full = (1 << g.n) - 1
    for size in range(1, max_size + 1):
        for clique in _cliques_of_size(g, size):
            rest = full & ~mask_of(clique)
            if not _connected_mask(g.masks, rest):
                comps = connected_components(g, members(rest))
                return CliqueCutset(tuple(clique), tuple(comps))
    return None


def clique_cutset_atoms(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the pieces left after splitting on clique cutsets.

    Connected components are split first; each piece is then split on its
    first clique cutset into ``component + clique`` parts until none is left.
    Pieces are returned sorted.  Any induced subgraph without a clique cutset
    (a wheel, for instance) lies inside one of them.
    """
    atoms = []
    stack = [tuple(c) for c in map(sorted, connected_components(g))]
    while stack:
        vs = stack.pop()
        sub, back = induced_subgraph(g, vs)
        cut = find_clique_cutset(sub)
        if cut is None:
            atoms.append(vs)
            continue
        for comp in cut.components:
            stack.append(tuple(sorted(back[i] for i in comp | set(cut.clique))))
    return sorted(atoms)


class Almost3(enum.Enum):
    THREE_CONNECTED = "three_connected"
    SUBDIVISION_CASE = "subdivision_case"
    NO = "no"


@dataclass(frozen=True)
class Almost3Verdict:
    kind: Almost3
    vertex: int | None = None


def is_almost_3_connected(g: Graph) -> Almost3Verdict:
    if g.n >= 4 and is_k_connected(g, 3):
        return Almost3Verdict(Almost3.THREE_CONNECTED)
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    if len(deg2) != 1:
        return Almost3Verdict(Almost3.NO)
    m = deg2[0]
    a, b = sorted(g.adj[m])
    if g.has_edge(a, b):
        return Almost3Verdict(Almost3.NO)
    edges = [e for e in g.edges() if m not in e] + [(a, b)]
    reduced, _ = induced_subgraph(Graph.from_edges(g.n, edges), [v for v in range(g.n) if v != m])
    if reduced.n >= 4 and is_k_connected(reduced, 3):
        return Almost3Verdict(Almost3.SUBDIVISION_CASE, m)
    return Almost3Verdict(Almost3.NO)


def two_cuts(g: Graph) -> list[tuple[int, int]]:
    """All vertex pairs whose removal disconnects a connected graph."""
    if not is_connected(g):
        raise ValueError("two_cuts needs a connected graph")
    return [(a, b) for a, b in combinations(range(g.n), 2) if disconnects(g, (a, b))]


def cut_vertices(g: Graph) -> list[int]:
    base = len(connected_components(g))
    return [v for v in range(g.n)
            if len(connected_components(g, (w for w in range(g.n) if w != v))) > base]


def _dfs_lowpoints(g: Graph):
    """Iterative DFS yielding (blocks, bridges) by Tarjan's lowpoint method."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[frozenset[int]] = []
    bridges: list[tuple[int, int]] = []
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        if not g.adj[root]:
            blocks.append(frozenset([root]))
            continue
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.append((min(parent, v), max(parent, v)))
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
    return blocks, sorted(bridges)


def biconnected_blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the blocks (bridges count as 2-vertex blocks)."""
    return _dfs_lowpoints(g)[0]


def bridges(g: Graph) -> list[tuple[int, int]]:
    return _dfs_lowpoints(g)[1]
