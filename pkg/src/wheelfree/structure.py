"""Basic graphs, triangle gluing and decomposition of 3-connected wheel-free planar graphs."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, Union

from . import named
from .connectivity import find_clique_cutset, is_k_connected
from .core import (Graph, SuppressionError, find_isomorphism, induced_subgraph,
                   is_connected, subdivide_all, suppress_degree2)
from .formats import from_graph6, read_graph6_lines, to_graph6
from .linegraph import line_graph, root_of_triangle_free_line_graph
from .patterns import BudgetExhausted, PatternKind, find_pattern, find_wheel
from .planar import is_planar, triangle_faces, triangle_is_face


def _three_connected(g: Graph) -> bool:
    return g.n >= 4 and is_k_connected(g, 3)


@dataclass(frozen=True)
class BasicVerdict:
    is_basic: bool
    evidence: str
    root: Graph | None = None      # H with L(H) = g
    reduced: Graph | None = None   # cubic R' with subdivide_all(R') = H

    def __bool__(self) -> bool:
        return self.is_basic


def is_basic_by_definition(g: Graph) -> BasicVerdict:
    """g = L(K_{2,3}), or g = L(H) with H a subdivided 3-connected cubic planar graph."""
    if g.n == 0 or not is_connected(g):
        return BasicVerdict(False, "disconnected")
    kr = root_of_triangle_free_line_graph(g)
    if kr is None:
        return BasicVerdict(False, "not the line graph of a triangle-free graph")
    h = kr.root
    if find_isomorphism(h, named.complete_bipartite(2, 3), cap=None) is not None:
        return BasicVerdict(True, "root K23", root=h)
    try:
        r = suppress_degree2(h)
    except SuppressionError:
        return BasicVerdict(False, "suppression creates a parallel edge", root=h)
    if r.n == 0 or any(d != 3 for d in r.degrees()):
        return BasicVerdict(False, "suppressed root is not cubic", root=h)
    if not _three_connected(r):
        return BasicVerdict(False, "suppressed root is not 3-connected", root=h)
    if not is_planar(r):
        return BasicVerdict(False, "suppressed root is not planar", root=h)
    if find_isomorphism(subdivide_all(r), h, cap=None) is None:
        return BasicVerdict(False, "root is not the full subdivision of its suppression", root=h)
    return BasicVerdict(True, "root is a subdivided 3-connected cubic planar graph", root=h, reduced=r)


def is_basic_by_characterization(g: Graph) -> bool:
    """3-connected, planar and {K4, claw, diamond, butterfly}-free."""
    if not _three_connected(g) or not is_planar(g):
        return False
    return all(find_pattern(g, k) is None for k in
               (PatternKind.K4, PatternKind.CLAW, PatternKind.DIAMOND, PatternKind.BUTTERFLY))


def is_basic_by_class(g: Graph, budget: float | None = 5.0) -> bool | None:
    """3-connected wheel-free planar line graph; None when the wheel search times out.

    Wheel-free graphs are K4-free, so claw- and diamond-freeness decide the
    line-graph part.
    """
    if not _three_connected(g) or not is_planar(g):
        return False
    if find_pattern(g, PatternKind.CLAW) is not None or find_pattern(g, PatternKind.DIAMOND) is not None:
        return False
    try:
        return find_wheel(g, budget) is None
    except BudgetExhausted:
        return None


# -- gluing ------------------------------------------------------------------

def _glue_layout(n1: int, g2: Graph, t1: Sequence[int], t2: Sequence[int]) -> list[int]:
    """Index in the glued graph of every vertex of g2."""
    where = {b: a for a, b in zip(t1, t2)}
    out = []
    nxt = n1
    for v in range(g2.n):
        if v in where:
            out.append(where[v])
        else:
            out.append(nxt)
            nxt += 1
    return out


def glue(g1: Graph, t1: Sequence[int], g2: Graph, t2: Sequence[int]) -> Graph:
    """Identify triangle t1 of g1 with triangle t2 of g2, t1[i] with t2[i].

    Vertices of g1 keep their indices; the other vertices of g2 follow in
    increasing order.  Both triangles must be faces of 3-connected planar graphs.
    """
    for g, t in ((g1, t1), (g2, t2)):
        if len(set(t)) != 3:
            raise ValueError(f"{tuple(t)} is not a triangle")
        if not triangle_is_face(g, t):
            raise ValueError(f"triangle {tuple(t)} is not a face")
    layout = _glue_layout(g1.n, g2, t1, t2)
    edges = set(g1.edges())
    for u, v in g2.edges():
        a, b = layout[u], layout[v]
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(g1.n + g2.n - 3, edges)


# -- decomposition trees -------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    graph: Graph
    labels: tuple[int, ...]  # labels[i] = vertex of the decomposed graph

    @property
    def leaves(self) -> list[Leaf]:
        return [self]


@dataclass(frozen=True)
class GlueNode:
    triangle: tuple[int, int, int]
    left: Union[Leaf, GlueNode]
    right: Union[Leaf, GlueNode]

    @property
    def leaves(self) -> list[Leaf]:
        return self.left.leaves + self.right.leaves


DecompositionTree = Union[Leaf, GlueNode]


class DecompositionError(RuntimeError):
    pass


def decompose(g: Graph, budget: float | None = 5.0) -> DecompositionTree:
    """Split a 3-connected wheel-free planar graph on triangle cutsets down to basic graphs.

    For a cutset K the lexicographically least component C of g - K becomes
    the left piece g[C + K]; the rest g - C is decomposed as the right piece.
    Every leaf is checked to be basic.
    """
    if not _three_connected(g):
        raise ValueError("decompose needs a 3-connected graph")
    if not is_planar(g):
        raise ValueError("decompose needs a planar graph")
    wheel = find_wheel(g, budget)
    if wheel is not None:
        raise ValueError(f"input contains a wheel: {wheel.certificate()}")
    return _decompose(g, tuple(range(g.n)))


def _decompose(g: Graph, labels: tuple[int, ...]) -> DecompositionTree:
    cut = find_clique_cutset(g, 3)
    if cut is None:
        verdict = is_basic_by_definition(g)
        if not verdict:
            raise DecompositionError(f"leaf is not basic ({verdict.evidence}): {to_graph6(g)}")
        return Leaf(g, labels)
    if len(cut.clique) != 3:
        raise DecompositionError("a 3-connected graph has a clique cutset smaller than 3")
    first = cut.components[0]
    pieces = []
    for keep in (first | set(cut.clique), set(range(g.n)) - first):
        sub, back = induced_subgraph(g, keep)
        pieces.append(_decompose(sub, tuple(labels[i] for i in back)))
    triangle = tuple(sorted(labels[v] for v in cut.clique))
    return GlueNode(triangle, pieces[0], pieces[1])


def replay(tree: DecompositionTree) -> tuple[Graph, list[int]]:
    """Rebuild the glued graph; returns it with the label of every vertex."""
    if isinstance(tree, Leaf):
        return tree.graph, list(tree.labels)
    g1, lab1 = replay(tree.left)
    g2, lab2 = replay(tree.right)
    pos1 = {x: i for i, x in enumerate(lab1)}
    pos2 = {x: i for i, x in enumerate(lab2)}
    try:
        t1 = [pos1[x] for x in tree.triangle]
        t2 = [pos2[x] for x in tree.triangle]
    except KeyError:
        raise DecompositionError(f"gluing triangle {tree.triangle} missing from a piece") from None
    glued = glue(g1, t1, g2, t2)
    layout = _glue_layout(g1.n, g2, t1, t2)
    labels = lab1 + [0] * (glued.n - g1.n)
    for v in range(g2.n):
        labels[layout[v]] = lab2[v]
    return glued, labels


def replay_graph(tree: DecompositionTree) -> Graph:
    """Replayed graph with vertices renumbered by label order."""
    g, labels = replay(tree)
    rank = {i: r for r, i in enumerate(sorted(range(g.n), key=lambda i: labels[i]))}
    return Graph.from_edges(g.n, ((rank[u], rank[v]) for u, v in g.edges()))


def tree_to_dict(tree: DecompositionTree) -> dict:
    if isinstance(tree, Leaf):
        return {"kind": "leaf", "graph6": to_graph6(tree.graph), "labels": list(tree.labels)}
    return {"kind": "glue", "triangle": list(tree.triangle),
            "left": tree_to_dict(tree.left), "right": tree_to_dict(tree.right)}


def tree_from_dict(d: dict) -> DecompositionTree:
    if d["kind"] == "leaf":
        g = from_graph6(d["graph6"])
        labels = tuple(d["labels"])
        if len(labels) != g.n:
            raise ValueError("leaf label count does not match its graph")
        return Leaf(g, labels)
    if d["kind"] == "glue":
        tri = tuple(d["triangle"])
        if len(tri) != 3:
            raise ValueError("glue node needs a 3-vertex triangle")
        return GlueNode(tri, tree_from_dict(d["left"]), tree_from_dict(d["right"]))
    raise ValueError(f"unknown node kind {d['kind']!r}")


def tree_to_json(tree: DecompositionTree) -> str:
    return json.dumps(tree_to_dict(tree), indent=1)


def tree_from_json(text: str) -> DecompositionTree:
    return tree_from_dict(json.loads(text))


# -- seeds and generator -------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    seed: Graph
    basic: Graph = field(repr=False)


def basic_from_seed(seed: Graph) -> Graph:
    """L(K_{2,3}) for K_{2,3} itself, else the line graph of the fully subdivided seed."""
    if find_isomorphism(seed, named.complete_bipartite(2, 3), cap=None) is not None:
        return line_graph(seed)[0]
    return line_graph(subdivide_all(seed))[0]


def seed_catalog() -> list[CatalogEntry]:
    seeds = [("K4", named.complete_graph(4)), ("prism", named.prism()),
             ("cube", named.cube()), ("K23", named.complete_bipartite(2, 3))]
    return [CatalogEntry(name, s, basic_from_seed(s)) for name, s in seeds]


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    """Extra seeds from a graph6 file of 3-connected cubic planar graphs."""
    out = []
    for i, seed in enumerate(read_graph6_lines(Path(path).read_text().splitlines())):
        if any(d != 3 for d in seed.degrees()) or not _three_connected(seed) or not is_planar(seed):
            raise ValueError(f"catalog entry {i} is not a 3-connected cubic planar graph")
        out.append(CatalogEntry(f"{Path(path).stem}:{i}", seed, basic_from_seed(seed)))
    return out


def catalog_by_name(extra: list[CatalogEntry] | None = None) -> dict[str, CatalogEntry]:
    return {e.name: e for e in seed_catalog() + (extra or [])}


def random_glue(g: Graph, piece: Graph, rng: random.Random) -> Graph:
    """Glue ``piece`` onto a random triangular face of g with a random matching."""
    t1 = rng.choice(triangle_faces(g))
    t2 = list(rng.choice(triangle_faces(piece)))
    rng.shuffle(t2)
    return glue(g, t1, piece, t2)


def glue_chain(names: Sequence[str], rng: random.Random | int | None = 0,
               catalog: dict[str, CatalogEntry] | None = None) -> Graph:
    """Basic graphs of ``names`` glued one after another, in that order."""
    catalog = catalog or catalog_by_name()
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    g = catalog[names[0]].basic
    for name in names[1:]:
        g = random_glue(g, catalog[name].basic, rng)
    return g


def generate(names: Sequence[str], glues: int = 0, rng: random.Random | int | None = 0,
             catalog: dict[str, CatalogEntry] | None = None) -> Graph:
    """A class member: the first seed's basic graph plus ``glues`` random gluings.

    Each glued piece is the basic graph of a seed drawn from ``names``.
    """
    catalog = catalog or catalog_by_name()
    if not names:
        raise ValueError("at least one seed name is required")
    for name in names:
        if name not in catalog:
            raise KeyError(f"unknown seed {name!r}; known: {sorted(catalog)}")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    g = catalog[names[0]].basic
    for _ in range(glues):
        g = random_glue(g, catalog[rng.choice(list(names))].basic, rng)
    return g

