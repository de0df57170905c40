"""Induced pattern search: the small fixed patterns, wheels, and chords of cycles."""

from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass

from . import named
from .connectivity import biconnected_blocks, clique_cutset_atoms
from .core import Edge, Graph, delete_edge, members


class PatternKind(enum.Enum):
    CLAW = "claw"
    DIAMOND = "diamond"
    BUTTERFLY = "butterfly"
    PAW = "paw"
    K4 = "K4"
    K23 = "K23"

    def graph(self) -> Graph:
        return _REFERENCE[self]()


_REFERENCE = {
    PatternKind.CLAW: named.claw,
    PatternKind.DIAMOND: named.diamond,
    PatternKind.BUTTERFLY: named.butterfly,
    PatternKind.PAW: named.paw,
    PatternKind.K4: lambda: named.complete_graph(4),
    PatternKind.K23: lambda: named.complete_bipartite(2, 3),
}


@dataclass(frozen=True)
class PatternWitness:
    kind: PatternKind
    vertices: tuple[int, ...]  # vertices[i] plays pattern vertex i

    def certificate(self) -> str:
        return f"PATTERN {self.kind.value} " + " ".join(map(str, self.vertices))

    def verify(self, g: Graph) -> bool:
        p = self.kind.graph()
        vs = self.vertices
        if len(set(vs)) != p.n:
            return False
        return all(g.has_edge(vs[i], vs[j]) == p.has_edge(i, j)
                   for i in range(p.n) for j in range(i + 1, p.n))


def _bfs_order(p: Graph, start: int) -> list[tuple[int, int]]:
    """Pattern vertices in BFS order, each with an earlier neighbor (-1 for start)."""
    order = [(start, -1)]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sorted(p.adj[v]):
            if w not in seen:
                seen.add(w)
                order.append((w, v))
                queue.append(w)
    return order


def find_pattern(g: Graph, kind: PatternKind | str) -> list[int] | None:
    """Induced occurrence of a fixed pattern, or None.

    The occurrence returned has the lexicographically least sorted vertex set;
    within that set the lexicographically least assignment is reported, listed
    in the pattern's own vertex order.
    """
    kind = PatternKind(kind)
    p = kind.graph()
    orders = [_bfs_order(p, s) for s in range(p.n)]
    for anchor in range(g.n):
        best = None
        for order in orders:
            assign = [-1] * p.n
            used: set[int] = set()

            def extend(i: int):
                nonlocal best
                if i == len(order):
                    key = (tuple(sorted(assign)), tuple(assign))
                    if best is None or key < best:
                        best = key
                    return
                q, via = order[i]
                pool = [anchor] if via == -1 else sorted(g.adj[assign[via]])
                for c in pool:
                    if c < anchor or c in used:
                        continue
                    if all(g.has_edge(c, assign[r]) == p.has_edge(q, r)
                           for r, _ in order[:i]):
                        assign[q] = c
                        used.add(c)
                        extend(i + 1)
                        used.discard(c)
                        assign[q] = -1

            extend(0)
        if best is not None:
            return list(best[1])
    return None


# -- wheels ------------------------------------------------------------------

class BudgetExhausted(RuntimeError):
    """The search ran out of time before reaching a verdict."""


@dataclass(frozen=True)
class WheelWitness:
    center: int
    rim: tuple[int, ...]

    def certificate(self) -> str:
        return f"WHEEL {self.center} " + " ".join(map(str, self.rim))

    def verify(self, g: Graph) -> bool:
        rim = self.rim
        k = len(rim)
        if k < 3 or len(set(rim)) != k or self.center in rim:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if g.has_edge(rim[i], rim[j]) != consecutive:
                    return False
        return sum(g.has_edge(self.center, r) for r in rim) >= 3


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.deadline is not None and self.ticks % 512 == 1 and time.monotonic() > self.deadline:
            raise BudgetExhausted("wheel search budget exhausted")


def _reach(masks: tuple[int, ...], start: int, allowed: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _strip_simplicial(masks: tuple[int, ...], region: int) -> int:
    """Drop vertices whose neighborhood in the region is a clique, until none is left.

    Such a vertex cannot lie on an induced cycle of length >= 4 inside the region.
    """
    changed = True
    while changed:
        changed = False
        for v in members(region):
            nv = masks[v] & region
            if all(not (nv & ~(1 << w) & ~masks[w]) for w in members(nv)):
                region &= ~(1 << v)
                changed = True
    return region


def _k4_with_center(masks: tuple[int, ...], u: int, region: int) -> list[int] | None:
    nbrs = members(masks[u] & region)
    for i, a in enumerate(nbrs):
        for j in range(i + 1, len(nbrs)):
            b = nbrs[j]
            if not (masks[a] >> b) & 1:
                continue
            common = masks[a] & masks[b] & masks[u] & region & ~((1 << (b + 1)) - 1)
            if common:
                return [a, b, (common & -common).bit_length() - 1]
    return None


def _wheel_with_center(masks: tuple[int, ...], u: int, region: int, clock: _Clock) -> list[int] | None:
    """Rim of a wheel centered at u inside ``region``: a triangle (K4) or a hole."""
    if bin(masks[u] & region).count("1") < 3:
        return None
    tri = _k4_with_center(masks, u, region)
    if tri is not None:
        return tri
    region = _strip_simplicial(masks, region & ~(1 << u))
    nbrs = masks[u] & region
    if bin(nbrs).count("1") < 3:
        return None
    for s in members(nbrs):
        # s is the least u-neighbor on the rim
        allowed = region & ~(nbrs & ((1 << s) - 1))
        s_adj = masks[s]
        path = [s]

        def dfs(on_path: int, blocked: int, count: int) -> list[int] | None:
            # blocked: closed neighborhoods of the path interior p1..p(k-1)
            clock.tick()
            last = path[-1]
            cand = masks[last] & allowed & ~on_path & ~blocked
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                c = count + ((nbrs >> w) & 1)
                if len(path) >= 2 and (s_adj >> w) & 1:
                    if c >= 3 and len(path) >= 3:
                        return path + [w]
                    continue
                new_blocked = blocked | masks[last] | (1 << last) if len(path) >= 2 else blocked
                # the rest of the rim must lead from w back to a neighbor of s;
                # u-neighbors adjacent to s can only be the closing vertex
                free = allowed & ~(on_path | low | new_blocked)
                reach = _reach(masks, w, free) & ~low
                if not reach & s_adj:
                    continue
                inner = bin(reach & nbrs & ~s_adj).count("1")
                if c + inner + (1 if reach & nbrs & s_adj else 0) < 3:
                    continue
                path.append(w)
                found = dfs(on_path | low, new_blocked, c)
                path.pop()
                if found:
                    return found
            return None

        found = dfs(1 << s, 0, 1)
        if found:
            return found
    return None


def find_wheel(g: Graph, budget: float | None = 5.0) -> WheelWitness | None:
    """An induced wheel of g, or None if g is wheel-free.

    Wheels have no clique cutset, so the search runs inside the clique-cutset
    atoms of g only.  Centers are tried in ascending order; for each center the
    rims are induced cycles found by a depth-first search over induced paths
    starting at the center's least neighbor.  ``budget`` is in seconds (None
    for no limit); running out raises :class:`BudgetExhausted`.
    """
    clock = _Clock(budget)
    atoms = clique_cutset_atoms(g)
    atom_masks = [sum(1 << v for v in a) for a in atoms]
    for u in range(g.n):
        if g.degree(u) < 3:
            continue
        for am in atom_masks:
            if not (am >> u) & 1:
                continue
            rim = _wheel_with_center(g.masks, u, am, clock)
            if rim is not None:
                return WheelWitness(u, tuple(rim))
    return None


# -- chords ------------------------------------------------------------------

def chord_edges(g: Graph) -> list[Edge]:
    """Edges xy that are a chord of some cycle.

    xy is such a chord iff x and y share a block of g - xy that has at least
    three vertices.
    """
    out = []
    for x, y in g.edges():
        h = delete_edge(g, (x, y))
        if any(len(b) >= 3 and x in b and y in b for b in biconnected_blocks(h)):
            out.append((x, y))
    return out


def is_almost_chordless(g: Graph) -> bool:
    return len(chord_edges(g)) <= 1


def is_chordless(g: Graph) -> bool:
    return not chord_edges(g)
