"""Simple undirected graphs on dense vertex indices and elementary transformations.

Every operation returns a new :class:`Graph`; vertex indices are always
``0..n-1`` (deletions and contractions compact the index range).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of the edge uv."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adj):
            for w in nbrs:
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise ValueError(f"neighbor {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise ValueError(f"asymmetric adjacency {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(a) for a in self.adj)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return vs


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s``; the returned list maps new indices to old ones."""
    keep = _check_vertices(g, s)
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in g.adj[v] if w in index) for v in keep)
    return Graph(len(keep), adj), keep


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = set(_check_vertices(g, s))
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = edge(*e)
    if g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is already an edge")
    adj = list(g.adj)
    adj[u] = adj[u] | {v}
    adj[v] = adj[v] | {u}
    return Graph(g.n, tuple(adj))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Merge the endpoints of ``e``; the merged vertex takes the smaller index.

    Parallel edges are merged and the loop dropped.  Indices above the larger
    endpoint shift down by one.
    """
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = set()
    for a, b in g.edges():
        a2, b2 = relabel(a), relabel(b)
        if a2 != b2:
            edges.add(edge(a2, b2))
    return Graph.from_edges(g.n - 1, edges)


def subdivide_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Replace uv by the path u-m-v; the new vertex m gets index n."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    edges = [x for x in g.edges() if x != edge(u, v)]
    edges += [(u, g.n), (v, g.n)]
    return Graph.from_edges(g.n + 1, edges)


def subdivide_all(g: Graph) -> Graph:
    """Subdivide every edge once.

    Original vertices keep their indices; the subdivision vertex of the i-th
    edge (lexicographic order) is ``n + i``.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        edges += [(u, g.n + i), (v, g.n + i)]
    return Graph.from_edges(g.n + g.m, edges)


class SuppressionError(ValueError):
    """Suppressing a degree-2 vertex would create a parallel edge."""


def suppress_degree2(g: Graph) -> Graph:
    """Repeatedly remove a degree-2 vertex and join its two neighbors.

    Works on the lowest-index degree-2 vertex first.  A component that has
    shrunk to a triangle of degree-2 vertices is left in place.  Raises
    :class:`SuppressionError` when the neighbors are already adjacent in any
    other situation.
    """
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))
    while True:
        target = None
        for v in sorted(alive):
            if len(adj[v]) != 2:
                continue
            a, b = sorted(adj[v])
            if b in adj[a]:
                if len(adj[a]) == 2 and len(adj[b]) == 2:
                    continue  # isolated triangle remnant
                raise SuppressionError(
                    f"suppressing {v} would create a parallel edge {a}-{b}")
            target = (v, a, b)
            break
        if target is None:
            break
        v, a, b = target
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        adj[v] = set()
        alive.discard(v)
    keep = sorted(alive)
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), tuple(frozenset(index[w] for w in adj[v]) for v in keep))


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex.

    With ``within``, components of the subgraph induced on that vertex set.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w in allowed and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    return len(connected_components(g, within)) <= 1


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """Return (bipartite?, side) where side[v] is 0 or 1 when bipartite."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False, []
    return True, side


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed to perm[v]."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, g1.edges() + shifted)


# -- isomorphism -------------------------------------------------------------

class SizeCapExceeded(ValueError):
    pass


def _joint_refinement(g1: Graph, g2: Graph) -> tuple[list[int], list[int]]:
    """Color refinement run on both graphs with a shared color namespace."""
    c1, c2 = g1.degrees(), g2.degrees()
    classes = len(set(c1) | set(c2))
    while True:
        sig1 = [(c1[v], tuple(sorted(c1[w] for w in g1.adj[v]))) for v in range(g1.n)]
        sig2 = [(c2[v], tuple(sorted(c2[w] for w in g2.adj[v]))) for v in range(g2.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sig1) | set(sig2)))}
        c1 = [ids[s] for s in sig1]
        c2 = [ids[s] for s in sig2]
        if len(ids) == classes:
            return c1, c2
        classes = len(ids)


def find_isomorphism(g1: Graph, g2: Graph, cap: int | None = 16) -> list[int] | None:
    """A bijection ``f`` with uv in g1 iff f(u)f(v) in g2, or None.

    Backtracking over color-refinement classes.  ``cap`` bounds the vertex
    count (None disables the bound).
    """
    if cap is not None and max(g1.n, g2.n) > cap:
        raise SizeCapExceeded(f"isomorphism test capped at n <= {cap}")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return []
    c1, c2 = _joint_refinement(g1, g2)
    if sorted(c1) != sorted(c2):
        return None

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(c2[v], []).append(v)

    # connected-first order: each vertex after the first in a component has a placed neighbor
    order: list[int] = []
    placed = [False] * n
    for comp in sorted(connected_components(g1),
                       key=lambda c: min(len(by_color[c1[v]]) for v in c)):
        start = min(comp, key=lambda v: (len(by_color[c1[v]]), v))
        queue = deque([start])
        placed[start] = True
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g1.adj[v], key=lambda w: (len(by_color[c1[w]]), w)):
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    fwd = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mapped_nbrs = [fwd[w] for w in g1.adj[v] if fwd[w] != -1]
        if mapped_nbrs:
            pool = sorted(set(g2.adj[mapped_nbrs[0]]))
        else:
            pool = by_color[c1[v]]
        for cand in pool:
            if used[cand] or c2[cand] != c1[v]:
                continue
            ok = True
            for u in order[:i]:
                if (u in g1.adj[v]) != (fwd[u] in g2.adj[cand]):
                    ok = False
                    break
            if not ok:
                continue
            fwd[v] = cand
            used[cand] = True
            if extend(i + 1):
                return True
            fwd[v] = -1
            used[cand] = False
        return False

    return fwd if extend(0) else None


def is_isomorphic(g1: Graph, g2: Graph, cap: int | None = 16) -> bool:
    return find_isomorphism(g1, g2, cap) is not None
