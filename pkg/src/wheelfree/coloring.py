"""Edge and vertex colorings.

* :func:`konig_edge_color` colors a bipartite graph with max-degree colors.
* :func:`three_edge_color_almost_chordless` 3-edge-colors a subcubic graph
  in which at most one edge is a chord of a cycle, by five reductions
  (light edge, cut vertex, 2-edge-cut, bipartite, single chord).
* :func:`three_color_wheel_free_planar` 3-colors a wheel-free planar graph by
  recursing on clique cutsets, degree-2 vertices and 2-cutsets, and reading
  colors off edge colorings of line-graph roots otherwise.

Each reduction is verified when its coloring is lifted.  A failed lift falls
back to exhaustive search and is counted in :class:`ColoringStats`.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations

from .connectivity import bridges, cut_vertices, find_clique_cutset, is_k_connected, two_cuts
from .core import (Edge, Graph, connected_components, delete_edge, edge, induced_subgraph,
                   is_bipartite)
from .formats import to_graph6
from .linegraph import root_of_triangle_free_line_graph
from .patterns import WheelWitness, find_wheel, is_almost_chordless
from .planar import is_planar

log = logging.getLogger(__name__)

EdgeColoring = dict[Edge, int]
VertexColoring = dict[int, int]
COLORS = (1, 2, 3)


@dataclass
class ColoringStats:
    edge_fallbacks: int = 0
    vertex_fallbacks: int = 0
    instances: list[tuple[str, str]] = field(default_factory=list)  # (kind, graph6)
    rules: Counter = field(default_factory=Counter)

    def reset(self):
        self.edge_fallbacks = self.vertex_fallbacks = 0
        self.instances.clear()
        self.rules.clear()


STATS = ColoringStats()


class NotBipartite(ValueError):
    pass


class OutOfClass(ValueError):
    """Input violates a precondition; ``witness`` carries the evidence if any."""

    def __init__(self, message: str, witness: WheelWitness | None = None):
        super().__init__(message)
        self.witness = witness


class TheoremViolation(RuntimeError):
    """No coloring exists where one is guaranteed; never expected."""


# -- verification --------------------------------------------------------------

def verify_edge_coloring(g: Graph, col: EdgeColoring, k: int | None = None) -> bool:
    missing = [e for e in g.edges() if e not in col]
    if missing:
        raise ValueError(f"edge coloring is partial, e.g. {missing[0]} is uncolored")
    for v in range(g.n):
        seen = [col[edge(v, w)] for w in g.adj[v]]
        if len(seen) != len(set(seen)):
            return False
    if k is not None and any(not 1 <= c <= k for c in (col[e] for e in g.edges())):
        return False
    return True


def verify_vertex_coloring(g: Graph, col: VertexColoring, k: int | None = None) -> bool:
    missing = [v for v in range(g.n) if v not in col]
    if missing:
        raise ValueError(f"vertex coloring is partial, e.g. {missing[0]} is uncolored")
    if any(col[u] == col[v] for u, v in g.edges()):
        return False
    if k is not None and any(not 1 <= col[v] <= k for v in range(g.n)):
        return False
    return True


def _pull_edges(col: EdgeColoring, back: list[int]) -> EdgeColoring:
    return {edge(back[u], back[v]): c for (u, v), c in col.items()}


def _palette(fixed: dict[int, int]) -> dict[int, int]:
    """Lexicographically first permutation of {1,2,3} extending ``fixed``."""
    for perm in permutations(COLORS):
        p = dict(zip(COLORS, perm))
        if all(p[a] == b for a, b in fixed.items()):
            return p
    raise ValueError(f"no palette permutation extends {fixed}")


# -- König ---------------------------------------------------------------------

def konig_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly max-degree colors.

    Edges are inserted one at a time; when the free colors at the two ends
    differ, the two colors are swapped along an alternating path.
    """
    if not is_bipartite(g)[0]:
        raise NotBipartite("König coloring needs a bipartite graph")
    delta = g.max_degree()
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # color -> neighbor
    for u, v in g.edges():
        a = next(c for c in range(1, delta + 1) if c not in at[u])
        b = next(c for c in range(1, delta + 1) if c not in at[v])
        if a in at[v]:
            path = []
            x, c = v, a
            while c in at[x]:
                y = at[x][c]
                path.append((x, y, c))
                x, c = y, (b if c == a else a)
            for x, y, c in path:
                del at[x][c]
                del at[y][c]
            for x, y, c in path:
                c2 = b if c == a else a
                at[x][c2] = y
                at[y][c2] = x
        at[u][a] = v
        at[v][a] = u
    return {edge(v, w): c for v in range(g.n) for c, w in at[v].items() if v < w}


# -- exhaustive fallbacks --------------------------------------------------------

def _exhaustive_edge3(g: Graph) -> EdgeColoring | None:
    edges = g.edges()
    col: EdgeColoring = {}
    used = [set() for _ in range(g.n)]

    def go(i: int) -> bool:
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in COLORS:
            if c in used[u] or c in used[v]:
                continue
            col[(u, v)] = c
            used[u].add(c)
            used[v].add(c)
            if go(i + 1):
                return True
            used[u].discard(c)
            used[v].discard(c)
        col.pop((u, v), None)
        return False

    return dict(col) if go(0) else None


def _exhaustive_color3(g: Graph) -> VertexColoring | None:
    col: VertexColoring = {}
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        blocked = {col[w] for w in g.adj[v] if w in col}
        for c in COLORS:
            if c not in blocked:
                col[v] = c
                if go(i + 1):
                    return True
                del col[v]
        return False

    return dict(col) if go(0) else None


# -- 3-edge-coloring of almost chordless subcubic graphs -----------------------

def three_edge_color_almost_chordless(g: Graph, stats: ColoringStats | None = None) -> EdgeColoring:
    if g.max_degree() > 3:
        raise ValueError("maximum degree exceeds 3")
    if not is_almost_chordless(g):
        raise ValueError("more than one edge is a chord of a cycle")
    col = _Edge3(stats or STATS).color(g)
    if not verify_edge_coloring(g, col, 3):
        raise TheoremViolation(f"improper 3-edge-coloring produced for {to_graph6(g)}")
    return col


class _Edge3:
    """Recursive 3-edge-coloring; the first applicable reduction wins."""

    def __init__(self, stats: ColoringStats):
        self.stats = stats

    def fallback(self, g: Graph, why: str) -> EdgeColoring:
        self.stats.edge_fallbacks += 1
        self.stats.instances.append(("edge", to_graph6(g)))
        log.warning("edge-coloring fallback (%s) on %s", why, to_graph6(g))
        col = _exhaustive_edge3(g)
        if col is None:
            raise TheoremViolation(f"no 3-edge-coloring of {to_graph6(g)}")
        return col

    def checked(self, g: Graph, col: EdgeColoring | None, why: str) -> EdgeColoring:
        if col is not None and verify_edge_coloring(g, col, 3):
            return col
        return self.fallback(g, why)

    def color(self, g: Graph) -> EdgeColoring:
        if g.m == 0:
            return {}
        comps = connected_components(g)
        if len(comps) > 1:
            out: EdgeColoring = {}
            for comp in comps:
                sub, back = induced_subgraph(g, comp)
                out.update(_pull_edges(self.color(sub), back))
            return out
        for rule in (self.r1_light_edge, self.r2_cut_vertex, self.r3_two_edge_cut,
                     self.r4_bipartite, self.r5_single_chord):
            col = rule(g)
            if col is not None:
                self.stats.rules[rule.__name__[:2].upper()] += 1
                return col
        return self.fallback(g, "no rule applies")

    def r1_light_edge(self, g: Graph) -> EdgeColoring | None:
        """An edge with both ends of degree <= 2: color the rest, then it."""
        for u, v in g.edges():
            if g.degree(u) <= 2 and g.degree(v) <= 2:
                col = self.color(delete_edge(g, (u, v)))
                used = {col[edge(u, w)] for w in g.adj[u] if w != v}
                used |= {col[edge(v, w)] for w in g.adj[v] if w != u}
                col[(u, v)] = min(set(COLORS) - used)
                return self.checked(g, col, "R1 lift")
        return None

    def r2_cut_vertex(self, g: Graph) -> EdgeColoring | None:
        """A cut vertex v: color both sides, then permute one palette at v."""
        cuts = cut_vertices(g)
        if not cuts:
            return None
        v = cuts[0]
        comps = connected_components(g, (w for w in range(g.n) if w != v))
        side1 = comps[0] | {v}
        side2 = set(range(g.n)) - comps[0]
        cols = []
        for side in (side1, side2):
            sub, back = induced_subgraph(g, side)
            cols.append(_pull_edges(self.color(sub), back))
        col1, col2 = cols
        at1 = {col1[edge(v, w)] for w in g.adj[v] if w in side1}
        at2 = [col2[edge(v, w)] for w in sorted(g.adj[v]) if w in side2]
        free = [c for c in COLORS if c not in at1]
        p = _palette(dict(zip(at2, free)))
        col = dict(col1)
        col.update({e: p[c] for e, c in col2.items()})
        return self.checked(g, col, "R2 lift")

    def _two_edge_cut(self, g: Graph):
        for e in g.edges():
            for f in bridges(delete_edge(g, e)):
                if f > e and not set(e) & set(f):
                    yield e, f

    def r3_two_edge_cut(self, g: Graph) -> EdgeColoring | None:
        """Disjoint edges u1u2, v1v2 whose removal disconnects g.

        Each side C_i gets a marker m_i joined to u_i and v_i; after coloring,
        palettes are permuted so u_i m_i has color 1 and v_i m_i color 2.
        """
        for e, f in self._two_edge_cut(g):
            h = delete_edge(delete_edge(g, e), f)
            comps = connected_components(h)
            if len(comps) != 2:
                continue
            c1 = comps[0]
            u1, u2 = e if e[0] in c1 else (e[1], e[0])
            v1, v2 = f if f[0] in c1 else (f[1], f[0])
            if u2 in c1 or v2 in c1:
                continue
            sides = []
            for comp, uu, vv in ((c1, u1, v1), (comps[1], u2, v2)):
                sub, back = induced_subgraph(g, comp)
                m = sub.n
                marked = Graph.from_edges(m + 1, sub.edges() + [(back.index(uu), m), (back.index(vv), m)])
                sides.append((marked, back, back.index(uu), back.index(vv), m))
            if any(s[0].m >= g.m for s in sides):
                continue
            col: EdgeColoring = {}
            for marked, back, iu, iv, m in sides:
                sc = self.color(marked)
                p = _palette({sc[edge(iu, m)]: 1, sc[edge(iv, m)]: 2})
                for (a, b), c in sc.items():
                    if m not in (a, b):
                        col[edge(back[a], back[b])] = p[c]
            col[edge(u1, u2)] = 1
            col[edge(v1, v2)] = 2
            return self.checked(g, col, "R3 lift")
        return None

    def r4_bipartite(self, g: Graph) -> EdgeColoring | None:
        """No edge between two degree-3 vertices: g is bipartite, use König."""
        if any(g.degree(u) == 3 and g.degree(v) == 3 for u, v in g.edges()):
            return None
        try:
            return self.checked(g, konig_edge_color(g), "R4 lift")
        except NotBipartite:
            return self.fallback(g, "R4 input not bipartite")

    def r5_single_chord(self, g: Graph) -> EdgeColoring | None:
        """Exactly one edge xy between degree-3 vertices.

        Delete xy, contract the edges from x and y to their other neighbors,
        König-color the result and lift.
        """
        heavy = [(u, v) for u, v in g.edges() if g.degree(u) == 3 and g.degree(v) == 3]
        if len(heavy) != 1:
            return self.fallback(g, f"{len(heavy)} edges between degree-3 vertices")
        x, y = heavy[0]
        xs = sorted(g.adj[x] - {y})
        ys = sorted(g.adj[y] - {x})
        if set(xs) == set(ys):
            if g.n != 4:
                return self.fallback(g, "shared neighbors outside a diamond")
            x1, x2 = xs
            col = {edge(x, y): 3, edge(x, x1): 1, edge(x, x2): 2, edge(y, x1): 2, edge(y, x2): 1}
            return self.checked(g, col, "diamond")
        if set(xs) & set(ys) or any(g.degree(w) != 2 for w in xs + ys):
            return self.fallback(g, "degenerate neighborhood of the chord")
        far = {w: next(iter(g.adj[w] - {x, y})) for w in xs + ys}
        new_edges = [(x, far[w]) for w in xs] + [(y, far[w]) for w in ys]
        if len({edge(*e) for e in new_edges}) != 4 or any(g.has_edge(*e) for e in new_edges):
            return self.fallback(g, "contraction creates a parallel edge")
        gone = set(xs + ys)
        kept = [e for e in g.edges() if e != (x, y) and not set(e) & gone]
        full = Graph.from_edges(g.n, kept + new_edges)
        contracted, back = induced_subgraph(full, [v for v in range(g.n) if v not in gone])
        try:
            kc = _pull_edges(konig_edge_color(contracted), back)
        except NotBipartite:
            return self.fallback(g, "contracted graph not bipartite")
        cx = [kc[edge(x, far[w])] for w in xs]
        cy = [kc[edge(y, far[w])] for w in ys]
        common = min(set(cx) & set(cy))
        other_x = cx[1] if cx[0] == common else cx[0]
        p = _palette({common: 1, other_x: 2})
        x_one, x_two = (xs[0], xs[1]) if cx[0] == common else (xs[1], xs[0])
        y_one, y_two = (ys[0], ys[1]) if cy[0] == common else (ys[1], ys[0])
        col: EdgeColoring = {}
        for e, c in kc.items():
            if x in e or y in e:
                continue
            col[e] = p[c]
        col[edge(x_one, far[x_one])] = 1
        col[edge(x_two, far[x_two])] = 2
        col[edge(y_one, far[y_one])] = 1
        col[edge(y_two, far[y_two])] = p[kc[edge(y, far[y_two])]]
        # the far ends keep their contracted colors, so the lift is local
        col[edge(x, x_one)] = 2
        col[edge(x, x_two)] = 1
        col[edge(y, y_one)] = 2
        col[edge(y, y_two)] = 1
        col[edge(x, y)] = 3
        return self.checked(g, col, "R5 lift")


# -- 3-coloring of wheel-free planar graphs --------------------------------------

def three_color_wheel_free_planar(g: Graph, budget: float | None = 5.0,
                                  stats: ColoringStats | None = None) -> VertexColoring:
    """Proper 3-coloring of a planar graph with no induced wheel.

    Raises :class:`OutOfClass` for non-planar input or when a wheel is found
    (the witness is attached); ``BudgetExhausted`` propagates from the wheel
    search.
    """
    if not is_planar(g):
        raise OutOfClass("graph is not planar")
    wheel = find_wheel(g, budget)
    if wheel is not None:
        raise OutOfClass(f"graph contains a wheel: {wheel.certificate()}", wheel)
    col = _Color3(stats or STATS).color(g)
    if not verify_vertex_coloring(g, col, 3):
        raise TheoremViolation(f"improper 3-coloring produced for {to_graph6(g)}")
    return col


class _Color3:
    def __init__(self, stats: ColoringStats):
        self.stats = stats
        self.edges = _Edge3(stats)

    def fallback(self, g: Graph, why: str) -> VertexColoring:
        self.stats.vertex_fallbacks += 1
        self.stats.instances.append(("vertex", to_graph6(g)))
        log.warning("vertex-coloring fallback (%s) on %s", why, to_graph6(g))
        col = _exhaustive_color3(g)
        if col is None:
            raise TheoremViolation(f"no 3-coloring of {to_graph6(g)}")
        return col

    def checked(self, g: Graph, col: VertexColoring | None, why: str) -> VertexColoring:
        if col is not None and verify_vertex_coloring(g, col, 3):
            return col
        return self.fallback(g, why)

    def sub(self, g: Graph, keep) -> VertexColoring:
        h, back = induced_subgraph(g, keep)
        return {back[v]: c for v, c in self.color(h).items()}

    def color(self, g: Graph) -> VertexColoring:
        if g.n == 0:
            return {}
        comps = connected_components(g)
        if len(comps) > 1:
            out: VertexColoring = {}
            for comp in comps:
                out.update(self.sub(g, comp))
            return out
        for rule in (self.s1_clique_cutset, self.s2_low_degree, self.s3_three_connected,
                     self.s4_two_cut):
            col = rule(g)
            if col is not None:
                self.stats.rules[rule.__name__[:2].upper()] += 1
                return col
        return self.fallback(g, "no rule applies")

    def s1_clique_cutset(self, g: Graph) -> VertexColoring | None:
        """Color both sides of a clique cutset and align them on the clique."""
        cut = find_clique_cutset(g, 3)
        if cut is None:
            return None
        k = set(cut.clique)
        first = cut.components[0]
        col1 = self.sub(g, first | k)
        col2 = self.sub(g, set(range(g.n)) - first)
        p = _palette({col2[v]: col1[v] for v in k})
        col = {v: p[c] for v, c in col2.items()}
        col.update(col1)
        return self.checked(g, col, "S1 merge")

    def s2_low_degree(self, g: Graph) -> VertexColoring | None:
        """A vertex of degree <= 2: color the rest, then it."""
        for u in range(g.n):
            if g.degree(u) <= 2:
                col = self.sub(g, [v for v in range(g.n) if v != u])
                col[u] = min(set(COLORS) - {col[w] for w in g.adj[u]})
                return self.checked(g, col, "S2 extend")
        return None

    def _edge_color_root(self, h: Graph) -> EdgeColoring | None:
        try:
            col = self.edges.color(h)
        except TheoremViolation:
            return None
        return col if verify_edge_coloring(h, col, 3) else None

    def s3_three_connected(self, g: Graph) -> VertexColoring | None:
        """g = L(H) with H chordless and subcubic: edge-color H."""
        if g.n < 4 or not is_k_connected(g, 3):
            return None
        kr = root_of_triangle_free_line_graph(g)
        if kr is None:
            return self.fallback(g, "3-connected atom is not a line graph")
        ecol = self._edge_color_root(kr.root)
        if ecol is None:
            return self.fallback(g, "root has no 3-edge-coloring")
        return self.checked(g, {v: ecol[e] for e, v in kr.edge_map.items()}, "S3 transfer")

    def s4_two_cut(self, g: Graph) -> VertexColoring | None:
        """2-cutset {a, b} with the smallest possible least component C.

        G_C = g[C + {a, b}] plus a path a-m-b is the line graph of some H.
        Edge colorings of H with a, b equal and with a, b different give two
        colorings of g[C + {a, b}]; the one matching a coloring of g - C is used.
        """
        best = None
        for a, b in two_cuts(g):
            comps = connected_components(g, (v for v in range(g.n) if v not in (a, b)))
            smallest = min(comps, key=lambda c: (len(c), min(c)))
            key = (len(smallest), (a, b))
            if best is None or key < best[0]:
                best = (key, (a, b), smallest)
        if best is None:
            return None
        _, (a, b), comp = best
        if g.has_edge(a, b):
            return self.fallback(g, "2-cut is a clique")
        side, back = induced_subgraph(g, comp | {a, b})
        pa, pb, m = back.index(a), back.index(b), side.n
        gc = Graph.from_edges(side.n + 1, side.edges() + [(pa, m), (pb, m)])
        kr = root_of_triangle_free_line_graph(gc)
        if kr is None:
            return self.fallback(g, "G_C is not a line graph")
        h = kr.root
        inv = kr.vertex_to_edge
        ea, eb, em = inv[pa], inv[pb], inv[m]
        shared_a, shared_b = set(em) & set(ea), set(em) & set(eb)
        if len(shared_a) != 1 or len(shared_b) != 1 or shared_a == shared_b:
            return self.fallback(g, "marker edge not between a and b")
        (ma,), (mb,) = shared_a, shared_b
        a1 = ea[0] if ea[1] == ma else ea[1]
        b1 = eb[0] if eb[1] == mb else eb[1]
        if a1 == b1 or h.has_edge(a1, b1) or h.degree(ma) != 2 or h.degree(mb) != 2:
            return self.fallback(g, "degenerate root around the marker")

        # a and b differently colored: edge-color H/m
        hm_edges = [edge(*(ma if w == mb else w for w in e)) for e in h.edges() if e != em]
        diff = self._edge_color_root(Graph.from_edges(h.n, hm_edges))
        if diff is not None:
            merged_b = edge(ma, b1)
            c_a, c_b = diff[ea], diff[merged_b]
            diff = {e: c for e, c in diff.items() if e != merged_b}
            diff[eb] = c_b
            diff[em] = min(set(COLORS) - {c_a, c_b})
        # a and b equally colored: edge-color H - {ma, mb} + a1b1
        hs_edges = [e for e in h.edges() if ma not in e and mb not in e] + [edge(a1, b1)]
        same = self._edge_color_root(Graph.from_edges(h.n, hs_edges))
        if same is not None:
            p = _palette({same[edge(a1, b1)]: 1})
            same = {e: p[c] for e, c in same.items() if e != edge(a1, b1)}
            same[ea] = same[eb] = 1
            same[em] = 2

        rest = self.sub(g, set(range(g.n)) - comp)
        want_same = rest[a] == rest[b]
        ecol = same if want_same else diff
        if ecol is None or not verify_edge_coloring(h, ecol, 3):
            return self.fallback(g, "S4 root coloring")
        local = {back[i]: ecol[inv[i]] for i in range(side.n)}
        p = _palette({local[a]: rest[a], local[b]: rest[b]})
        col = dict(rest)
        col.update({v: p[c] for v, c in local.items() if v in comp})
        return self.checked(g, col, "S4 merge")
