"""Constructions between circular-arc models and grid/rectangle path models."""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .circle import (
    Arc,
    CircularArcModel,
    ModelError,
    check_model,
    contains_position,
    gap_midpoint,
    is_normal,
)
from .graph import Graph
from .grid import GridModel, GridPath, GridPoint, PathError, Rect, edge_set, validate_epr


# -- CA -> B3-EPG --------------------------------------------------------------


def ca_to_b3_epg(m: CircularArcModel) -> GridModel:
    """Three-bend grid representation of a circular-arc model.

    Row/column ``i`` of the grid stands for endpoint ``i``. Arcs avoiding
    point 0 are encoded twice as the interval ``(a, b)``, once on row 0 and
    once on column 0. Arcs through point 0 use row 0 from column 0 to ``b``
    and column 0 from row ``a`` to row ``2n + 1``, so they all share the edge
    (0,0)-(0,1).
    """
    check_model(m)
    top = 2 * m.n + 1
    paths = []
    for arc in m.arcs:
        a, b = arc.tail, arc.head
        if a < b:
            corners = [(0, b), (0, a), (a, a), (a, 0), (b, 0)]
        else:
            corners = [(0, 0), (0, b), (a, b), (a, 0), (top, 0)]
        paths.append(GridPath(arc.id, tuple(GridPoint(*c) for c in corners)))
    return GridModel(tuple(paths))


# -- rectangle embeddings -------------------------------------------------------


@dataclass(frozen=True)
class PerimeterLayout:
    """Where circle features land on the rectangle boundary.

    Distances are measured clockwise along the perimeter from the top-left
    corner. ``corner_at`` holds the circle positions placed on the four
    corners (top-left, top-right, bottom-right, bottom-left).
    """

    width: int
    height: int
    corner_at: tuple[Fraction, ...]
    endpoint_distance: dict

    @property
    def perimeter(self) -> int:
        return 2 * (self.width + self.height)

    @property
    def rect(self) -> Rect:
        return Rect(0, self.height, 0, self.width)

    def corner_distances(self) -> tuple[int, int, int, int]:
        w, h = self.width, self.height
        return (0, w, w + h, 2 * w + h)

    def point(self, d: int) -> GridPoint:
        w, h = self.width, self.height
        d %= self.perimeter
        if d <= w:
            return GridPoint(0, d)
        if d <= w + h:
            return GridPoint(d - w, w)
        if d <= 2 * w + h:
            return GridPoint(h, w - (d - w - h))
        return GridPoint(h - (d - 2 * w - h), 0)

    def distance(self, pt: GridPoint) -> int:
        w, h = self.width, self.height
        r, c = pt
        if r == 0:
            return c
        if c == w:
            return w + r
        if r == h:
            return w + h + (w - c)
        if c == 0:
            return 2 * w + h + (h - r)
        raise PathError(f"point {tuple(pt)} is not on the rectangle boundary")


def _layout(m: CircularArcModel, corners: Sequence[Fraction]) -> PerimeterLayout:
    if len(corners) != 4:
        raise ValueError("exactly four corner positions are required")
    items: list[tuple[Fraction, int, object]] = []
    for i, a in enumerate(m.arcs):
        items.append((Fraction(a.tail), 1, (i, "t")))
        items.append((Fraction(a.head), 1, (i, "h")))
    for k, c in enumerate(corners):
        if c == int(c) and 1 <= c <= 2 * m.n:
            raise ModelError(f"corner position {c} coincides with an arc endpoint")
        items.append((Fraction(c), 0, ("corner", k)))
    items.sort(key=lambda t: (t[0], t[1], str(t[2])))
    first = next(i for i, t in enumerate(items) if t[2][0] == "corner")
    items = items[first:] + items[:first]
    corner_idx = [i for i, t in enumerate(items) if t[2][0] == "corner"]
    bounds = corner_idx + [len(items)]
    counts = [bounds[s + 1] - bounds[s] - 1 for s in range(4)]
    w = max(counts[0], counts[2]) + 1
    h = max(counts[1], counts[3]) + 1
    side_start = (0, w, w + h, 2 * w + h)
    dist: dict = {}
    for s in range(4):
        for off, idx in enumerate(range(bounds[s] + 1, bounds[s + 1]), start=1):
            dist[items[idx][2]] = side_start[s] + off
    placed = tuple(items[i][0] for i in corner_idx)
    return PerimeterLayout(w, h, placed, dist)


def _arc_path(layout: PerimeterLayout, arc_index: int, vid: Hashable) -> GridPath:
    ds = layout.endpoint_distance[(arc_index, "t")]
    de = layout.endpoint_distance[(arc_index, "h")]
    if de < ds:
        de += layout.perimeter
    per = layout.perimeter
    passed = sorted(
        c for base in (0, per) for c in (base + x for x in layout.corner_distances()) if ds < c < de
    )
    pts = [layout.point(ds)] + [layout.point(c) for c in passed] + [layout.point(de)]
    return GridPath(vid, tuple(pts))


def embed_on_rectangle(m: CircularArcModel, corners: Sequence[Fraction]) -> tuple[GridModel, PerimeterLayout]:
    """Embed the circle on a rectangle boundary, order preserving, with the four
    rectangle corners at the given circle positions (clockwise)."""
    check_model(m)
    layout = _layout(m, corners)
    paths = tuple(_arc_path(layout, i, a.id) for i, a in enumerate(m.arcs))
    return GridModel(paths, layout.rect), layout


def ca_to_b4_epr(m: CircularArcModel) -> GridModel:
    """Natural rectangle embedding; corners sit in the gaps after endpoints
    0, n/2, n and 3n/2 (rounded down), so every path has at most four bends."""
    check_model(m)
    two_n = 2 * m.n
    corners = [gap_midpoint((two_n * q) // 4, m.n) for q in range(4)]
    return embed_on_rectangle(m, corners)[0]


def nca_to_b2_epr(m: CircularArcModel) -> GridModel:
    """Two-bend rectangle model of a normal model.

    Two consecutive corners go to a point ``p`` and the other two to a point
    ``q`` outside every arc through ``p``; no arc holds both, so each path
    turns at two corners or none.
    """
    check_model(m)
    if not is_normal(m):
        raise ModelError("model not normal")
    gaps = [gap_midpoint(j, m.n) for j in range(2 * m.n)]
    p = gaps[0]
    through_p = [a for a in m.arcs if contains_position(a, p)]
    q = next(
        (g for g in gaps[1:] if not any(contains_position(a, g) for a in through_p)),
        None,
    )
    if q is None:
        raise ModelError("model not normal")
    return embed_on_rectangle(m, [p, p, q, q])[0]


# -- four points -------------------------------------------------------------


@dataclass(frozen=True)
class FourPoints:
    points: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        pts = tuple(sorted(Fraction(p) for p in self.points))
        if len(pts) != 4 or len(set(pts)) != 4:
            raise ValueError("four pairwise distinct points are required")
        object.__setattr__(self, "points", pts)


def certify_four_points(m: CircularArcModel, fp: FourPoints) -> bool:
    """No point is an endpoint and no arc contains two of the points."""
    for p in fp.points:
        if p == int(p) or not 1 <= p < 2 * m.n + 1:
            return False
    return all(sum(contains_position(a, p) for p in fp.points) <= 1 for a in m.arcs)


def find_four_points(m: CircularArcModel) -> FourPoints | None:
    """Exhaustive search for four points, no two inside a common arc.

    Only one representative per gap is needed since all points of a gap lie
    in the same arcs. A gap covered by no arc may host several points (placed
    at the midpoint and then 1/8 apart), which only matters for models that
    leave part of the circle uncovered.
    """
    n = m.n
    slots: list[tuple[Fraction, int]] = []
    for j in range(2 * n):
        mid = gap_midpoint(j, n)
        mask = 0
        for i, a in enumerate(m.arcs):
            if contains_position(a, mid):
                mask |= 1 << i
        copies = 4 if mask == 0 else 1
        slots.extend((mid + Fraction(r, 8), mask) for r in range(copies))

    chosen: list[int] = []

    def search(start: int, used: int) -> bool:
        if len(chosen) == 4:
            return True
        for s in range(start, len(slots)):
            mask = slots[s][1]
            if mask & used:
                continue
            chosen.append(s)
            if search(s + 1, used | mask):
                return True
            chosen.pop()
        return False

    if not search(0, 0):
        return None
    return FourPoints(tuple(slots[s][0] for s in chosen))


def nhca_to_b1_epr(m: CircularArcModel, fp: FourPoints) -> GridModel:
    """Place the rectangle corners on certified four points; each arc holds at
    most one of them, so each path bends at most once."""
    check_model(m)
    if not certify_four_points(m, fp):
        raise ModelError("four points are not certified for this model")
    return embed_on_rectangle(m, fp.points)[0]


# -- rectangle -> circle -------------------------------------------------------


def epr_to_ca(m: GridModel) -> CircularArcModel:
    """Read an EPR model back as open arcs on the circle formed by the rectangle
    boundary.

    Endpoints that coincide on the boundary are separated before renumbering:
    heads come before tails (touching paths share no edge, so their arcs must
    stay disjoint), then ties are broken by path order.
    """
    if m.rect is None or not validate_epr(m):
        raise PathError("model is not a valid EPR model")
    r = m.rect
    w, h = r.c2 - r.c1, r.r2 - r.r1
    layout = PerimeterLayout(w, h, (), {})
    per = layout.perimeter

    def step(e) -> int:
        a, b = (GridPoint(p.row - r.r1, p.col - r.c1) for p in e)
        da, db = layout.distance(a), layout.distance(b)
        if (db - da) % per == 1:
            return da
        return db

    events: list[tuple[int, int, int, int]] = []
    for order, p in enumerate(m.paths):
        steps = {step(e) for e in edge_set(p)}
        if len(steps) >= per:
            raise PathError(f"path {p.id!r} covers the whole rectangle boundary")
        start = next(s for s in sorted(steps) if (s - 1) % per not in steps)
        length = len(steps)
        if any((start + i) % per not in steps for i in range(length)):
            raise PathError(f"path {p.id!r} is not a contiguous boundary path")
        end = (start + length) % per
        events.append((start, 1, order, 0))
        events.append((end, 0, order, 1))
    events.sort()
    tails: dict[int, int] = {}
    heads: dict[int, int] = {}
    for rank, (_, _, order, role) in enumerate(events, start=1):
        (heads if role else tails)[order] = rank
    arcs = tuple(Arc(p.id, tails[i], heads[i]) for i, p in enumerate(m.paths))
    return check_model(CircularArcModel(arcs))


# -- separation witnesses ---------------------------------------------------------


@dataclass(frozen=True)
class SeparationWitness:
    sets: tuple[frozenset, frozenset, frozenset, frozenset]

    def __post_init__(self) -> None:
        if len(self.sets) != 4:
            raise ValueError("a separation witness has exactly four vertex sets")
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))


def derive_separating_cliques(m: CircularArcModel, fp: FourPoints) -> SeparationWitness:
    if not certify_four_points(m, fp):
        raise ModelError("four points are not certified for this model")
    sets = []
    for p in fp.points:
        members = frozenset(a.id for a in m.arcs if contains_position(a, p))
        if not members:
            raise ModelError("graph is chordal along this model: a point lies in no arc")
        sets.append(members)
    return SeparationWitness(tuple(sets))


def _separated(g: Graph, x: frozenset, y: frozenset, removed: frozenset) -> bool:
    keep = set(g.vertices) - removed
    return not any(comp & x and comp & y for comp in g.components(keep))


def verify_separation(g: Graph, w: SeparationWitness, require_complete: bool = False) -> bool:
    h1, h2, h3, h4 = w.sets
    allv = set(g.vertices)
    for i, s in enumerate(w.sets):
        if not s or not s <= allv:
            return False
        for t in w.sets[i + 1 :]:
            if s & t:
                return False
        if require_complete:
            if not g.is_clique(s):
                return False
        elif len(g.components(s)) != 1:
            return False
    return _separated(g, h1, h3, h2 | h4) and _separated(g, h2, h4, h1 | h3)
