"""Line graphs and root reconstruction for {claw, diamond}-free graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Graph, edge, is_connected
from .patterns import PatternKind, find_pattern


def line_graph(h: Graph) -> tuple[Graph, list[Edge]]:
    """L(h); vertex i of the result is the i-th edge of h in lexicographic order."""
    edges = h.edges()
    at: list[list[int]] = [[] for _ in range(h.n)]
    for i, (u, v) in enumerate(edges):
        at[u].append(i)
        at[v].append(i)
    pairs = set()
    for incident in at:
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                pairs.add((incident[i], incident[j]))
    return Graph.from_edges(len(edges), pairs), edges


@dataclass(frozen=True)
class KrauszRoot:
    """Root graph H with a bijection from edges of H onto the vertices of G."""

    root: Graph
    edge_map: dict[Edge, int]

    @property
    def vertex_to_edge(self) -> dict[int, Edge]:
        return {v: e for e, v in self.edge_map.items()}

    def matches(self, g: Graph) -> bool:
        """Exact check that L(root) equals g under edge_map."""
        if sorted(self.edge_map.values()) != list(range(g.n)) or len(self.edge_map) != self.root.m:
            return False
        inv = self.vertex_to_edge
        for a in range(g.n):
            for b in range(a + 1, g.n):
                shares = bool(set(inv[a]) & set(inv[b]))
                if shares != g.has_edge(a, b):
                    return False
        return True

    def lines(self) -> list[str]:
        out = [f"{self.root.n} {self.root.m}"]
        out += [f"{u} {v}" for u, v in self.root.edges()]
        out += [f"MAP {u} {v} -> {x}" for (u, v), x in sorted(self.edge_map.items())]
        return out


class RootVerificationError(RuntimeError):
    pass


def root_of_triangle_free_line_graph(g: Graph) -> KrauszRoot | None:
    """Triangle-free H with L(H) = g, or None when g has a claw or a diamond.

    The cliques of the Krausz partition are the closures {u, v} + common
    neighbors of the edges of g (unique because g is diamond-free).  They
    become the vertices of H, together with one pendant vertex for each
    vertex of g lying in a single clique.  For a lone triangle this yields
    K_{1,3}, never K_3.
    """
    if g.n < 1 or not is_connected(g):
        raise ValueError("root reconstruction needs a connected non-empty graph")
    if find_pattern(g, PatternKind.CLAW) or find_pattern(g, PatternKind.DIAMOND):
        return None

    cliques = sorted({tuple(sorted({u, v} | (g.adj[u] & g.adj[v]))) for u, v in g.edges()})
    containing: list[list[int]] = [[] for _ in range(g.n)]
    for ci, clique in enumerate(cliques):
        for v in clique:
            containing[v].append(ci)

    nodes = len(cliques)
    ends: list[tuple[int, int]] = []
    for v in range(g.n):
        cs = containing[v]
        if len(cs) > 2:
            raise RootVerificationError(f"vertex {v} lies in {len(cs)} cliques")
        while len(cs) < 2:
            cs = cs + [nodes]
            nodes += 1
        ends.append((cs[0], cs[1]))

    root = Graph.from_edges(nodes, ends)
    out = KrauszRoot(root, {edge(a, b): v for v, (a, b) in enumerate(ends)})
    if not out.matches(g):
        raise RootVerificationError("reconstructed root does not reproduce the input")
    return out
