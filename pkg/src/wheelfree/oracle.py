"""Slow, obvious reference implementations used to cross-check the fast paths.

Nothing here imports the algorithmic modules; only the Graph type is shared.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations

from .core import Graph


def _bits(x: int) -> int:
    return bin(x).count("1")


def chromatic_number_bf(g: Graph, cap: int = 5) -> int | None:
    """Least k <= cap admitting a proper k-coloring, or None if there is none."""
    if g.n == 0:
        return 0
    nbrs = [sorted(w for w in g.adj[v] if w < v) for v in range(g.n)]

    def colorable(k: int) -> bool:
        col = [0] * g.n

        def go(v: int, used: int) -> bool:
            if v == g.n:
                return True
            # symmetry: a vertex may open at most one new color
            for c in range(1, min(k, used + 1) + 1):
                if all(col[w] != c for w in nbrs[v]):
                    col[v] = c
                    if go(v + 1, max(used, c)):
                        return True
            col[v] = 0
            return False

        return go(0, 0)

    for k in range(1, cap + 1):
        if colorable(k):
            return k
    return None


def edge_chromatic_bf(g: Graph, cap: int = 5) -> int | None:
    """Least k <= cap admitting a proper k-edge-coloring, or None."""
    edges = [(u, v) for u in range(g.n) for v in g.adj[u] if u < v]
    if not edges:
        return 0

    def colorable(k: int) -> bool:
        used = [set() for _ in range(g.n)]

        def go(i: int) -> bool:
            if i == len(edges):
                return True
            u, v = edges[i]
            for c in range(k):
                if c not in used[u] and c not in used[v]:
                    used[u].add(c)
                    used[v].add(c)
                    if go(i + 1):
                        return True
                    used[u].discard(c)
                    used[v].discard(c)
            return False

        return go(0)

    for k in range(1, cap + 1):
        if colorable(k):
            return k
    return None


def _induces_cycle(adjm: list[int], s: int) -> bool:
    if _bits(s) < 3:
        return False
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        if _bits(adjm[low.bit_length() - 1] & s) != 2:
            return False
    # 2-regular: a cycle iff connected
    start = s & -s
    seen = frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= adjm[low.bit_length() - 1]
        frontier = nxt & s & ~seen
        seen |= frontier
    return seen == s


def wheel_free_bf(g: Graph, max_n: int = 12) -> bool:
    """True iff no vertex subset induces a cycle with an outside vertex seeing 3 of it."""
    if g.n > max_n:
        raise ValueError(f"wheel_free_bf is limited to n <= {max_n}")
    adjm = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    for s in range(1 << g.n):
        if not _induces_cycle(adjm, s):
            continue
        for u in range(g.n):
            if not (s >> u) & 1 and _bits(adjm[u] & s) >= 3:
                return False
    return True


def all_cycles_bf(g: Graph) -> list[tuple[int, ...]]:
    """Every cycle once, as a vertex sequence starting at its least vertex."""
    out = []
    for s in range(g.n):
        path = [s]

        def go():
            last = path[-1]
            for w in sorted(g.adj[last]):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and w not in path:
                    path.append(w)
                    go()
                    path.pop()

        go()
    return out


def chord_edges_bf(g: Graph) -> list[tuple[int, int]]:
    chords = set()
    for cyc in all_cycles_bf(g):
        k = len(cyc)
        on = {(min(cyc[i], cyc[(i + 1) % k]), max(cyc[i], cyc[(i + 1) % k])) for i in range(k)}
        for a, b in combinations(sorted(cyc), 2):
            if b in g.adj[a] and (a, b) not in on:
                chords.add((a, b))
    return sorted(chords)


def clique_number_bf(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        if any(all(b in g.adj[a] for a, b in combinations(s, 2)) for s in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def independence_number_bf(g: Graph) -> int:
    best = 0
    for size in range(1, g.n + 1):
        if any(all(b not in g.adj[a] for a, b in combinations(s, 2)) for s in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


class FixtureError(RuntimeError):
    pass


def fixture_r35() -> Graph:
    """The circulant C13(1, 5), checked to have clique number 2 and independence number 4."""
    n = 13
    edges = {(min(i, (i + d) % n), max(i, (i + d) % n)) for i in range(n) for d in (1, 5)}
    g = Graph.from_edges(n, edges)
    if clique_number_bf(g) != 2 or independence_number_bf(g) != 4:
        raise FixtureError("C13(1,5) does not have omega = 2 and alpha = 4")
    return g


# -- exhaustive small-graph enumeration ------------------------------------------

def _invariant(adj: list[set[int]]) -> tuple:
    n = len(adj)
    per = []
    for v in range(n):
        tri = sum(1 for a, b in combinations(sorted(adj[v]), 2) if b in adj[a])
        per.append((len(adj[v]), tuple(sorted(len(adj[w]) for w in adj[v])), tri))
    return (sum(len(a) for a in adj) // 2, tuple(sorted(per)))


def _naive_isomorphic(a: list[set[int]], b: list[set[int]]) -> bool:
    n = len(a)
    f = [-1] * n
    used = [False] * n

    def go(v: int) -> bool:
        if v == n:
            return True
        for c in range(n):
            if used[c] or len(b[c]) != len(a[v]):
                continue
            if all((w in a[v]) == (f[w] in b[c]) for w in range(v)):
                f[v] = c
                used[c] = True
                if go(v + 1):
                    return True
                used[c] = False
        f[v] = -1
        return False

    return go(0)


def _connected(adj: list[set[int]]) -> bool:
    if not adj:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def enumerate_graphs(n: int, connected: bool = True, max_degree: int | None = None) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (optionally connected / degree-bounded).

    Graphs on k vertices are obtained from those on k-1 by adding a vertex
    with every admissible neighbor set, then deduplicated by an invariant
    bucket plus a plain backtracking isomorphism test.
    """
    level: list[list[set[int]]] = [[]]
    for k in range(1, n + 1):
        buckets: dict[tuple, list[list[set[int]]]] = defaultdict(list)
        nxt = []
        for base in level:
            open_slots = [v for v in range(k - 1) if max_degree is None or len(base[v]) < max_degree]
            top = len(open_slots) if max_degree is None else min(max_degree, len(open_slots))
            for size in range(top + 1):
                for nbrs in combinations(open_slots, size):
                    adj = [set(s) for s in base] + [set(nbrs)]
                    for w in nbrs:
                        adj[w].add(k - 1)
                    key = _invariant(adj)
                    if any(_naive_isomorphic(adj, other) for other in buckets[key]):
                        continue
                    buckets[key].append(adj)
                    nxt.append(adj)
        level = nxt
    out = [Graph(n, tuple(frozenset(s) for s in adj)) for adj in level]
    if connected:
        out = [g for g, adj in zip(out, level) if _connected(adj)]
    return out
