"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""

import json
import random
import time

import pytest

from arcbend.circle import intersection_graph, is_normal, is_normal_helly
from arcbend.cli import main
from arcbend.families import (
    SpiderFixture,
    canonical_cycle_power_model,
    cycle_power,
    random_ca_model,
    random_normal_model,
    random_short_arc_model,
    spider_fixture,
    thick_spider,
)
from arcbend.formats import emit_arcs, emit_graph, emit_paths, parse_arcs, parse_graph, parse_paths
from arcbend.grid import (
    C4Kind,
    PathError,
    classify_c4,
    epg_intersection_graph,
    max_bends,
    paths_from,
    shared_edges,
    validate_epr,
)
from arcbend.recognition import (
    Verdict,
    contains_induced,
    cycle_power_contains_criterion,
    decide_b1_epr,
    is_chordal,
)
from arcbend.transforms import (
    ca_to_b3_epg,
    ca_to_b4_epr,
    derive_separating_cliques,
    epr_to_ca,
    find_four_points,
    nca_to_b2_epr,
    nhca_to_b1_epr,
    verify_separation,
)

from test_grid import FALSE_PIE, FRAME, TRUE_PIE

pytestmark = pytest.mark.acceptance

CANONICAL_GRID = [(n, k) for k in range(2, 7) for n in range(2 * k + 2, 41)]


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def b1_corpus():
    """Models on which the pipeline yields a one-bend rectangle model."""
    models = [canonical_cycle_power_model(n, k) for n, k in CANONICAL_GRID if 2 * n >= 8 * k]
    seed = 0
    while len(models) < 200:
        m = random_short_arc_model(seed, 4 + seed % 20, 1 / 3)
        seed += 1
        if is_normal_helly(m) and find_four_points(m) is not None:
            models.append(m)
    return models


def test_c01_b3_epg_soundness():
    with Clock() as clk:
        for seed in range(1, 501):
            m = random_ca_model(seed, 1 + (seed - 1) % 50)
            gm = ca_to_b3_epg(m)
            assert epg_intersection_graph(gm) == intersection_graph(m)
            assert max_bends(gm) <= 3
            for a, b in shared_edges(gm):
                assert (a.row == b.row == 0) or (a.col == b.col == 0)
    assert clk.seconds < 10


def test_c02_b2_epr_soundness():
    with Clock() as clk:
        for seed in range(200):
            m = random_normal_model(seed, 1 + seed % 30)
            assert is_normal(m)
            gm = nca_to_b2_epr(m)
            assert epg_intersection_graph(gm) == intersection_graph(m)
            assert validate_epr(gm)
            assert max_bends(gm) <= 2
    assert clk.seconds < 10


def test_c03_normal_helly_iff_six_k_below_two_n():
    with Clock() as clk:
        for n, k in CANONICAL_GRID:
            assert is_normal_helly(canonical_cycle_power_model(n, k)) == (6 * k < 2 * n)
    assert clk.seconds < 5


def test_c04_four_point_boundary():
    with Clock() as clk:
        checked = 0
        for n, k in CANONICAL_GRID:
            m = canonical_cycle_power_model(n, k)
            if not is_normal_helly(m):
                continue
            assert (find_four_points(m) is None) == (2 * n < 8 * k)
            checked += 1
    assert checked > 0
    assert clk.seconds < 60


def test_c05_b1_epr_pipeline():
    with Clock() as clk:
        yes = decide_b1_epr(canonical_cycle_power_model(9, 2))
        no = decide_b1_epr(canonical_cycle_power_model(7, 2))
    assert yes.verdict is Verdict.YES
    assert set(yes.checks) == {"graph_equality", "bend_bound", "epr_valid", "nh_valid"}
    assert all(yes.checks.values())
    assert epg_intersection_graph(yes.model) == cycle_power(9, 2)
    assert max_bends(yes.model) <= 1 and validate_epr(yes.model)
    assert no.verdict is Verdict.NO and no.obstruction_t == 2
    assert clk.seconds < 5


def test_c06_criterion_matches_induced_search():
    pattern = cycle_power(7, 2)
    with Clock() as clk:
        for k in (2, 3):
            for n in range(2 * k + 2, 13):
                expected = contains_induced(cycle_power(n, k), pattern)
                assert cycle_power_contains_criterion(n, k, 2) == expected
    assert clk.seconds < 120


def test_c07_rectangle_to_circle_soundness():
    corpus = b1_corpus()
    with Clock() as clk:
        for m in corpus:
            gm = nhca_to_b1_epr(m, find_four_points(m))
            assert max_bends(gm) <= 1
            back = epr_to_ca(gm)
            assert is_normal_helly(back)
            assert intersection_graph(back) == epg_intersection_graph(gm) == intersection_graph(m)
    assert len(corpus) >= 200
    assert clk.seconds < 10


def test_c08_separation_witness():
    checked = 0
    for m in b1_corpus():
        g = intersection_graph(m)
        if is_chordal(g):
            continue
        w = derive_separating_cliques(m, find_four_points(m))
        assert verify_separation(g, w, require_complete=True)
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("which", list(SpiderFixture))
def test_c09_spider_fixtures(which):
    gm = spider_fixture(which)
    assert epg_intersection_graph(gm) == thick_spider(which.spider_size)
    assert max_bends(gm) <= which.bend_bound
    if which.rectangular:
        assert validate_epr(gm)


def test_c10_c4_trichotomy():
    assert classify_c4(paths_from(TRUE_PIE)).kind is C4Kind.TRUE_PIE
    assert classify_c4(paths_from(FALSE_PIE)).kind is C4Kind.FALSE_PIE
    assert classify_c4(paths_from(FRAME)).kind is C4Kind.FRAME
    two_bends = [("P1", [(5, 2), (5, 5), (3, 5), (3, 6)])] + TRUE_PIE[1:]
    with pytest.raises(PathError, match="not a B1 C4 witness"):
        classify_c4(paths_from(two_bends))


def test_c11_format_round_trips_and_exit_codes(tmp_path, capsys):
    rng = random.Random(11)
    for i in range(1000):
        m = random_ca_model(rng.randrange(10**9), rng.randint(1, 25))
        text = emit_arcs(m)
        assert emit_arcs(parse_arcs(text)) == text and parse_arcs(text) == m
        g = intersection_graph(m)
        gtext = emit_graph(g)
        assert emit_graph(parse_graph(gtext)) == gtext and parse_graph(gtext) == g
        gm = ca_to_b4_epr(m) if i % 2 else ca_to_b3_epg(m)
        ptext = emit_paths(gm)
        assert emit_paths(parse_paths(ptext)) == ptext

    for i in range(40):
        m = random_ca_model(i, 3 + i % 8)
        other = random_ca_model(i + 1000, 3 + i % 8)
        arcs, wrong = tmp_path / f"m{i}.arcs", tmp_path / f"o{i}.arcs"
        paths = tmp_path / f"m{i}.paths"
        arcs.write_text(emit_arcs(m))
        wrong.write_text(emit_arcs(other))
        paths.write_text(emit_paths(ca_to_b3_epg(m)))
        for against, bends in ((arcs, 3), (arcs, 0), (wrong, 3)):
            code = main(["verify", str(paths), "--against", str(against), "--bends", str(bends), "--format", "json"])
            report = json.loads(capsys.readouterr().out)
            assert code == (0 if report["ok"] else 1)
            assert report["ok"] == all(report["checks"].values())
        code = main(["decide", str(arcs), "--format", "json"])
        report = json.loads(capsys.readouterr().out)
        assert code == (0 if report["ok"] else 1)
        assert report["ok"] == (report["result"]["verdict"] != "No")
