from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcbend.circle import CircularArcModel, intersection_graph, is_normal_helly
from arcbend.families import (
    canonical_cycle_power_model,
    cycle_power,
    random_interval_model,
    random_short_arc_model,
    thick_spider,
)
from arcbend.graph import Graph
from arcbend.grid import epg_intersection_graph, max_bends, validate_epr
from arcbend.recognition import (
    Reason,
    Verdict,
    contains_induced,
    cycle_power_contains_criterion,
    decide_b1_epr,
    has_power_cycle_obstruction,
    interval_layout,
    is_chordal,
    maximum_cardinality_order,
)
from arcbend.transforms import epr_to_ca

import oracles
from strategies import arc_models, small_graphs


def cycle(n):
    vs = [f"x{i}" for i in range(n)]
    return Graph.from_edges(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


# -- chordality ----------------------------------------------------------------------


def test_chordality_examples():
    assert not is_chordal(cycle(4))
    tree = Graph.from_edges("abcde", [("a", "b"), ("a", "c"), ("c", "d"), ("c", "e")])
    assert is_chordal(tree)
    c72 = cycle_power(7, 2)
    assert is_chordal(c72) == (not oracles.has_chordless_cycle(c72))
    assert not is_chordal(c72)


def test_search_order_visits_every_vertex_once():
    g = thick_spider(4)
    order = maximum_cardinality_order(g)
    assert sorted(order) == sorted(g.vertices)


@given(small_graphs())
@settings(max_examples=300, deadline=None)
def test_chordality_matches_chordless_cycle_search(g):
    assert is_chordal(g) == (not oracles.has_chordless_cycle(g))


def test_chordality_on_every_graph_with_five_vertices():
    vs = list("abcde")
    pairs = list(combinations(vs, 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(vs, [p for i, p in enumerate(pairs) if mask >> i & 1])
        assert is_chordal(g) == (not oracles.has_chordless_cycle(g))


# -- induced subgraphs -----------------------------------------------------------------


def test_contains_induced_examples():
    assert contains_induced(cycle_power(7, 2), cycle(4))
    assert contains_induced(thick_spider(6), thick_spider(3))
    assert not contains_induced(cycle(5), cycle(4))
    assert contains_induced(cycle(5), Graph.from_edges([], []))
    assert not contains_induced(cycle(4), cycle(5))


@given(small_graphs(max_vertices=7), small_graphs(max_vertices=4))
@settings(max_examples=200, deadline=None)
def test_contains_induced_matches_networkx(g, h):
    assert contains_induced(g, h) == oracles.nx_contains_induced(g, h)


def test_pinning_is_safe_on_vertex_transitive_hosts():
    for n, k in [(7, 2), (9, 2), (10, 3), (11, 3)]:
        g = cycle_power(n, k)
        pattern = cycle_power(7, 2)
        assert contains_induced(g, pattern, host_transitive=True) == contains_induced(g, pattern)


# -- cycle-power criterion ------------------------------------------------------------


def test_criterion_examples():
    assert cycle_power_contains_criterion(7, 2, 2)
    assert not cycle_power_contains_criterion(9, 2, 2)
    assert cycle_power_contains_criterion(10, 3, 2)
    with pytest.raises(ValueError):
        cycle_power_contains_criterion(5, 2, 2)
    with pytest.raises(ValueError):
        cycle_power_contains_criterion(9, 1, 2)


def test_criterion_boundaries_are_exact():
    # n/k equal to (4t-1)/t is inside, equal to (4t-5)/(t-1) is outside
    assert cycle_power_contains_criterion(14, 4, 2)
    assert not cycle_power_contains_criterion(12, 4, 2)
    assert cycle_power_contains_criterion(11, 3, 3)


def test_criterion_matches_the_search_for_t_two():
    pattern = cycle_power(7, 2)
    for k in (2, 3):
        for n in range(2 * k + 2, 13):
            expected = contains_induced(cycle_power(n, k), pattern, host_transitive=True)
            assert cycle_power_contains_criterion(n, k, 2) == expected


def test_obstruction_examples():
    assert has_power_cycle_obstruction(cycle_power(7, 2), 5) == 2
    assert has_power_cycle_obstruction(cycle_power(9, 2), 5) is None
    assert has_power_cycle_obstruction(cycle_power(11, 3), 3) == 3


@given(st.integers(0, 10**6), st.integers(1, 12))
@settings(max_examples=50, deadline=None)
def test_interval_graphs_carry_no_obstruction(seed, n):
    g = intersection_graph(random_interval_model(seed, n))
    assert is_chordal(g)
    assert has_power_cycle_obstruction(g, 3) is None


# -- B1-EPR decision -----------------------------------------------------------------


def test_decide_yes_on_c9_squared():
    d = decide_b1_epr(canonical_cycle_power_model(9, 2))
    assert d.verdict is Verdict.YES and d.accepted
    assert d.checks and all(d.checks.values())
    assert epg_intersection_graph(d.model) == cycle_power(9, 2)
    assert max_bends(d.model) <= 1 and validate_epr(d.model)


def test_decide_no_on_c7_squared():
    d = decide_b1_epr(canonical_cycle_power_model(7, 2))
    assert d.verdict is Verdict.NO and not d.accepted
    assert d.reason is Reason.NO_FOUR_POINTS
    assert d.obstruction_t == 2


def test_decide_interval_model():
    m = CircularArcModel.from_pairs([("a", 1, 4), ("b", 2, 6), ("c", 5, 8), ("d", 3, 7)])
    d = decide_b1_epr(m)
    assert d.verdict is Verdict.YES_INTERVAL
    assert max_bends(d.model) == 0
    assert epg_intersection_graph(d.model) == intersection_graph(m)


def test_decide_chordal_model_covering_the_circle():
    # a triangle of arcs whose union covers every gap, but pairs do not
    m = CircularArcModel.from_pairs([("a", 1, 4), ("b", 3, 6), ("c", 5, 2)])
    d = decide_b1_epr(m)
    if is_normal_helly(m):
        assert d.accepted or (d.chordal and d.notes)
    else:
        assert d.reason is Reason.NOT_NH_MODEL


def test_decide_not_normal_helly_is_model_relative():
    d = decide_b1_epr(canonical_cycle_power_model(6, 2))
    assert d.verdict is Verdict.NO and d.reason is Reason.NOT_NH_MODEL
    assert any("model-relative" in note for note in d.notes)


def test_interval_layout_rejects_a_covered_cut():
    m = CircularArcModel.from_pairs([("a", 1, 4), ("b", 3, 2)])
    with pytest.raises(ValueError):
        interval_layout(m, 0)


@given(arc_models(max_arcs=9))
@settings(max_examples=150, deadline=None)
def test_accepted_decisions_are_verified(m):
    d = decide_b1_epr(m)
    if not d.accepted:
        return
    g = intersection_graph(m)
    assert epg_intersection_graph(d.model) == g
    assert validate_epr(d.model)
    assert max_bends(d.model) <= (0 if d.verdict is Verdict.YES_INTERVAL else 1)
    assert is_normal_helly(epr_to_ca(d.model))


@given(arc_models(min_arcs=4, max_arcs=11))
@settings(max_examples=150, deadline=None)
def test_yes_iff_no_power_cycle_on_non_chordal_nh_models(m):
    g = intersection_graph(m)
    if not is_normal_helly(m) or is_chordal(g):
        return
    d = decide_b1_epr(m)
    obstruction = has_power_cycle_obstruction(g, len(g) // 4 + 1)
    assert (d.verdict is Verdict.YES) == (obstruction is None)


def non_chordal_nh_corpus():
    out = [canonical_cycle_power_model(n, k) for k in (2, 3) for n in range(3 * k + 1, 17)]
    for seed in range(3000):
        out.append(random_short_arc_model(seed, 4 + seed % 11, 0.35))
    return [m for m in out if is_normal_helly(m) and not is_chordal(intersection_graph(m))]


def test_yes_iff_no_power_cycle_on_a_fixed_corpus():
    corpus = non_chordal_nh_corpus()
    assert len(corpus) >= 60
    verdicts = set()
    for m in corpus:
        g = intersection_graph(m)
        d = decide_b1_epr(m)
        obstruction = has_power_cycle_obstruction(g, len(g) // 4 + 1)
        assert (d.verdict is Verdict.YES) == (obstruction is None)
        if d.verdict is Verdict.NO:
            assert d.obstruction_t == obstruction
        verdicts.add(d.verdict)
    assert verdicts == {Verdict.YES, Verdict.NO}
