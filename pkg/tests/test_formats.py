from __future__ import annotations

import pytest
from hypothesis import given

from wheelfree import named
from wheelfree.core import Graph
from wheelfree.formats import (ParseError, from_edgelist, from_graph6, read_graph,
                               read_graph6_lines, to_edgelist, to_graph6)

from conftest import graphs


def test_known_graph6_strings():
    # reference strings as produced by nauty's geng/showg
    assert to_graph6(named.complete_graph(4)) == "C~"
    assert to_graph6(named.path_graph(2)) == "A_"
    assert to_graph6(Graph.empty(0)) == "?"
    assert from_graph6("C~") == named.complete_graph(4)


def test_large_size_field_round_trip():
    g = named.cycle_graph(70)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g


def test_header_is_accepted():
    assert from_graph6(">>graph6<<C~") == named.complete_graph(4)


@pytest.mark.parametrize("bad", ["", "C", ":Fa@x^", "C~~", "C\x01"])
def test_malformed_graph6(bad):
    with pytest.raises(ParseError):
        from_graph6(bad)


def test_edgelist_round_trip_and_comments():
    text = "# a comment\n3 2\n0 1\n1 2\n"
    assert from_edgelist(text) == named.path_graph(3)
    assert from_edgelist(to_edgelist(named.prism())) == named.prism()


@pytest.mark.parametrize("bad", ["", "3 2\n0 1\n", "2 1\n0 5\n", "x y\n"])
def test_malformed_edgelist(bad):
    with pytest.raises(ParseError):
        from_edgelist(bad)


def test_read_graph(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(named.prism()) + "\n")
    assert read_graph(p) == named.prism()
    q = tmp_path / "g.txt"
    q.write_text(to_edgelist(named.cube()))
    assert read_graph(q, "edgelist") == named.cube()


def test_read_graph6_lines_skips_blanks():
    out = list(read_graph6_lines(["C~", "", "A_"]))
    assert out == [named.complete_graph(4), named.path_graph(2)]


@given(graphs(max_n=12))
def test_graph6_round_trip_is_identity(g):
    assert from_graph6(to_graph6(g)) == g


@given(graphs(max_n=10))
def test_edgelist_round_trip_is_identity(g):
    assert from_edgelist(to_edgelist(g)) == g
