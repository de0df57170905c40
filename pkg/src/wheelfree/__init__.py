"""Recognition, decomposition and coloring for planar wheel-free graphs."""

from __future__ import annotations

from .core import Graph, find_isomorphism, is_isomorphic
from .formats import ParseError, from_edgelist, from_graph6, to_edgelist, to_graph6
from .patterns import BudgetExhausted, PatternKind, WheelWitness, find_pattern, find_wheel

__all__ = [
    "BudgetExhausted", "Graph", "ParseError", "PatternKind", "WheelWitness",
    "find_isomorphism", "find_pattern", "find_wheel", "from_edgelist",
    "from_graph6", "is_isomorphic", "to_edgelist", "to_graph6",
]
