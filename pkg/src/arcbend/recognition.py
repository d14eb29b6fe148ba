"""Chordality, induced-subgraph search, and the B1-EPR decision for a given
normal Helly model."""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass, field
from enum import Enum

from .circle import (
    CircularArcModel,
    ModelError,
    check_model,
    contains_position,
    gap_midpoint,
    intersection_graph,
    is_normal_helly,
    shrink_dominated,
)
from .families import cycle_power
from .graph import Graph
from .grid import GridModel, GridPath, GridPoint, Rect, epg_intersection_graph, max_bends, validate_epr
from .transforms import epr_to_ca, find_four_points, nhca_to_b1_epr


def maximum_cardinality_order(g: Graph) -> list[Hashable]:
    """Vertices in maximum cardinality search order (ties by vertex order)."""
    weight = {v: 0 for v in g.vertices}
    order: list[Hashable] = []
    left = list(g.vertices)
    while left:
        v = max(left, key=lambda u: weight[u])
        left.remove(v)
        order.append(v)
        for w in g.neighbors(v):
            if w in weight and w not in order:
                weight[w] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Test via maximum cardinality search: the reverse visiting order is a
    perfect elimination ordering iff the graph is chordal."""
    order = maximum_cardinality_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbors(v) if pos[w] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        if not set(earlier) - {parent} <= g.neighbors(parent):
            return False
    return True


def contains_induced(g: Graph, h: Graph, *, host_transitive: bool = False) -> bool:
    """Backtracking search for an induced copy of ``h`` in ``g``.

    Pattern vertices are matched in breadth-first order so each new vertex has
    an already placed neighbor; host candidates are tried by descending
    degree. With ``host_transitive`` the host is assumed vertex-transitive and
    the first pattern vertex is pinned to a single host vertex.

    Worst case is exponential in ``len(h)``; intended for patterns of a dozen
    vertices or so.
    """
    if len(h) > len(g):
        return False
    if not h.vertices:
        return True
    order: list = []
    seen: set = set()
    for root in sorted(h.vertices, key=h.degree, reverse=True):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(h.neighbors(u), key=h.degree, reverse=True):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    host = sorted(g.vertices, key=g.degree, reverse=True)
    hdeg = {u: h.degree(u) for u in h.vertices}
    placed: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        cands = host[:1] if (i == 0 and host_transitive) else host
        for x in cands:
            if x in used or g.degree(x) < hdeg[u]:
                continue
            nx = g.neighbors(x)
            if all((placed[w] in nx) == h.adjacent(u, w) for w in placed):
                placed[u] = x
                used.add(x)
                if extend(i + 1):
                    return True
                del placed[u]
                used.discard(x)
        return False

    return extend(0)


def cycle_power_contains_criterion(n: int, k: int, t: int) -> bool:
    """Whether C_n^k contains C_{4t-1}^t, via (4t-5)/(t-1) < n/k <= (4t-1)/t.

    Evaluated by cross-multiplication so boundary equalities are exact.
    """
    if k < 2 or t < 2 or not 2 * k + 1 < n:
        raise ValueError(f"criterion needs k >= 2, t >= 2 and 2k + 1 < n (got n={n}, k={k}, t={t})")
    return (4 * t - 5) * k < (t - 1) * n and t * n <= (4 * t - 1) * k


def has_power_cycle_obstruction(g: Graph, t_max: int) -> int | None:
    """Smallest t in [2, t_max] with C_{4t-1}^t induced in ``g``, else None."""
    for t in range(2, t_max + 1):
        if 4 * t - 1 > len(g):
            break
        if contains_induced(g, cycle_power(4 * t - 1, t)):
            return t
    return None


# -- decision ---------------------------------------------------------------------


class Verdict(str, Enum):
    YES = "Yes"
    YES_INTERVAL = "YesInterval"
    NO = "No"


class Reason(str, Enum):
    NOT_NH_MODEL = "NotNHModel"
    POWER_CYCLE_OBSTRUCTION = "PowerCycleObstruction"
    NO_FOUR_POINTS = "NoFourPoints"


@dataclass
class B1Decision:
    verdict: Verdict
    model: GridModel | None = None
    reason: Reason | None = None
    obstruction_t: int | None = None
    chordal: bool = False
    four_points: tuple | None = None
    notes: list[str] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.verdict is not Verdict.NO


def interval_layout(m: CircularArcModel, gap: int) -> GridModel:
    """Zero-bend model on the top side of a rectangle, cutting the circle at
    an uncovered gap."""
    two_n = 2 * m.n

    def col(e: int) -> int:
        return (e - gap - 1) % two_n

    paths = []
    for a in m.arcs:
        lo, hi = col(a.tail), col(a.head)
        if lo > hi:
            raise ValueError(f"arc {a.id!r} crosses the cut gap {gap}")
        paths.append(GridPath(a.id, (GridPoint(0, lo), GridPoint(0, hi))))
    return GridModel(tuple(paths), Rect(0, 1, 0, max(two_n - 1, 1)))


def _uncovered_gap(m: CircularArcModel) -> int | None:
    for j in range(2 * m.n):
        mid = gap_midpoint(j, m.n)
        if not any(contains_position(a, mid) for a in m.arcs):
            return j
    return None


def verify_b1_model(g: Graph, gm: GridModel, bound: int = 1) -> dict[str, bool]:
    checks = {
        "graph_equality": epg_intersection_graph(gm) == g,
        "bend_bound": max_bends(gm) <= bound,
        "epr_valid": validate_epr(gm),
    }
    checks["nh_valid"] = checks["epr_valid"] and is_normal_helly(epr_to_ca(gm))
    return checks


def decide_b1_epr(m: CircularArcModel) -> B1Decision:
    """B1-EPR decision relative to the supplied model.

    A normal Helly model of a non-chordal graph yields a one-bend rectangle
    model exactly when four points exist with no arc holding two of them; if
    none exist the graph contains some C_{4t-1}^t, reported for diagnosis.
    A failed normal Helly test only says something about this model.
    """
    check_model(m)
    g = intersection_graph(m)
    if not is_normal_helly(m):
        return B1Decision(
            Verdict.NO,
            reason=Reason.NOT_NH_MODEL,
            notes=["model-relative: the graph may still have a different normal Helly model"],
        )
    if is_chordal(g):
        work = m
        gap = _uncovered_gap(work)
        for _ in range(work.n * work.n):
            if gap is not None:
                break
            try:
                nxt = shrink_dominated(work)
            except ModelError:
                break
            if nxt == work:
                break
            work = nxt
            gap = _uncovered_gap(work)
        if gap is None:
            return B1Decision(
                Verdict.NO,
                reason=Reason.NO_FOUR_POINTS,
                chordal=True,
                notes=["chordal graph but every gap of the model is covered; flagged for manual review"],
            )
        gm = interval_layout(work, gap)
        checks = verify_b1_model(g, gm, bound=0)
        return B1Decision(Verdict.YES_INTERVAL, model=gm, chordal=True, checks=checks)

    fp = find_four_points(m)
    if fp is None:
        t = has_power_cycle_obstruction(g, len(g) // 4 + 1)
        notes = [] if t is not None else ["no four points and no C_{4t-1}^t found"]
        return B1Decision(Verdict.NO, reason=Reason.NO_FOUR_POINTS, obstruction_t=t, notes=notes)
    gm = nhca_to_b1_epr(m, fp)
    checks = verify_b1_model(g, gm)
    if not all(checks.values()):
        raise AssertionError(f"one-bend construction failed its own verification: {checks}")
    return B1Decision(Verdict.YES, model=gm, four_points=fp.points, checks=checks)
