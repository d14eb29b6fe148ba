import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcbend.circle import intersection_graph
from arcbend.families import SpiderFixture, cycle_power, random_ca_model, spider_fixture, thick_spider
from arcbend.formats import (
    FormatError,
    emit_arcs,
    emit_graph,
    emit_paths,
    parse_arcs,
    parse_graph,
    parse_paths,
)
from arcbend.grid import bend_count, epg_intersection_graph
from arcbend.transforms import ca_to_b3_epg, ca_to_b4_epr

from strategies import arc_models, small_graphs


# -- arcs -------------------------------------------------------------------------


def test_parse_arcs_example():
    m = parse_arcs("arcs 2\narc v1 1 3\narc v2 2 4\n")
    assert m.n == 2
    assert intersection_graph(m).adjacent("v1", "v2")


@pytest.mark.parametrize(
    "text, needle, line",
    [
        ("arcs 1\narc v1 1 1\n", "tail equals head", 2),
        ("arcs 2\narc a 1 3\narc b 3 2\n", "duplicate endpoint 3", 3),
        ("arcs 1\narc a 1 5\n", "out of range", 2),
        ("arcs 1\narc a 1\n", "malformed", 2),
        ("arcs 1\narc a one 2\n", "integers", 2),
        ("arc a 1 2\n", "header", 1),
        ("arcs 2\narc a 1 2\n", "declares 2 arcs", 1),
        ("arcs 1\narc é 1 2\n", "ASCII", 2),
    ],
)
def test_parse_arcs_diagnostics(text, needle, line):
    with pytest.raises(FormatError) as err:
        parse_arcs(text)
    assert any(needle in msg and ln == line for ln, msg in err.value.diagnostics)


def test_comments_and_blank_lines_are_ignored():
    text = "# model\n\narcs 1\n  # one arc\narc a 1 2\n"
    assert emit_arcs(parse_arcs(text)) == "arcs 1\narc a 1 2\n"


@given(arc_models(max_arcs=12))
@settings(max_examples=200, deadline=None)
def test_arcs_round_trip(m):
    text = emit_arcs(m)
    assert parse_arcs(text) == m
    assert emit_arcs(parse_arcs(text)) == text


# -- paths ------------------------------------------------------------------------


def test_parse_paths_examples():
    gm = parse_paths("paths 1\npath v1 (0,8) (0,3) (3,3)\n")
    assert bend_count(gm.path("v1")) == 1 and gm.rect is None
    with pytest.raises(FormatError, match="diagonal"):
        parse_paths("paths 1\npath v1 (0,0) (1,1)\n")
    with pytest.raises(FormatError, match="zero-length"):
        parse_paths("paths 1\npath v1 (0,0) (0,0)\n")
    with pytest.raises(FormatError, match="bad point"):
        parse_paths("paths 1\npath v1 (0,0) (0;1)\n")
    with pytest.raises(FormatError, match="rectangle"):
        parse_paths("paths 0 rect 3 1 0 2\n")
    with pytest.raises(FormatError, match="duplicate path ids"):
        parse_paths("paths 2\npath a (0,0) (0,1)\npath a (1,0) (1,1)\n")


def test_rectangle_header_round_trips():
    text = "paths 1 rect 0 2 0 3\npath a (0,1) (0,3) (2,3)\n"
    gm = parse_paths(text)
    assert gm.mode == "EPR"
    assert emit_paths(gm) == text


def test_b3_output_is_a_canonical_fixpoint():
    gm = ca_to_b3_epg(random_ca_model(5, 9))
    once = emit_paths(gm)
    assert emit_paths(parse_paths(once)) == once


def test_paths_are_emitted_in_natural_id_order():
    gm = parse_paths("paths 3\npath v10 (0,0) (0,1)\npath v2 (0,0) (0,1)\npath v1 (0,0) (0,1)\n")
    ids = [line.split()[1] for line in emit_paths(gm).splitlines()[1:]]
    assert ids == ["v1", "v2", "v10"]


@pytest.mark.parametrize("which", list(SpiderFixture))
def test_fixture_files_are_canonical(which):
    gm = spider_fixture(which)
    assert emit_paths(parse_paths(emit_paths(gm))) == emit_paths(gm)
    assert epg_intersection_graph(parse_paths(emit_paths(gm))) == thick_spider(which.spider_size)


@given(arc_models(max_arcs=10), st.booleans())
@settings(max_examples=200, deadline=None)
def test_paths_round_trip(m, rect):
    gm = ca_to_b4_epr(m) if rect else ca_to_b3_epg(m)
    text = emit_paths(gm)
    back = parse_paths(text)
    assert emit_paths(back) == text
    assert back.rect == gm.rect
    assert {p.id: p.corners for p in back.paths} == {p.id: p.corners for p in gm.paths}


# -- graphs -----------------------------------------------------------------------


def test_graph_round_trip_examples():
    g = cycle_power(7, 2)
    assert parse_graph(emit_graph(g)) == g
    with pytest.raises(FormatError, match="duplicate edge"):
        parse_graph("graph 2 2\nvertex a\nvertex b\nedge a b\nedge b a\n")
    with pytest.raises(FormatError):
        parse_graph("graph 2 1\nvertex a\nvertex b\nedge a c\n")
    with pytest.raises(FormatError, match="declares"):
        parse_graph("graph 3 0\nvertex a\n")


@given(small_graphs())
@settings(max_examples=200, deadline=None)
def test_graph_round_trip(g):
    text = emit_graph(g)
    assert parse_graph(text) == g
    assert emit_graph(parse_graph(text)) == text
