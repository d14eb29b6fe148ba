"""Circular-arc models on a discretized circle.

Endpoints of a model with ``n`` arcs are the integers ``1..2n`` placed
clockwise. Every other point of the circle lies in one of the ``2n`` gaps
between consecutive endpoints, and all points of a gap belong to exactly the
same arcs. Positions are therefore represented as :class:`fractions.Fraction`
values in ``[1, 2n + 1)``: endpoint ``i`` is ``i`` and the midpoint of gap
``j`` (between endpoints ``j`` and ``j + 1``) is ``j + 1/2``. Gap ``0`` sits
between ``2n`` and ``1`` and its midpoint is written ``2n + 1/2``; this is the
point 0 of the circle used by the grid constructions.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph

HALF = Fraction(1, 2)


class ModelError(ValueError):
    """Raised when a circular-arc model is invalid or an operation's
    precondition on the model does not hold."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Arc:
    """Open arc running clockwise from ``tail`` to ``head``."""

    id: Hashable
    tail: int
    head: int

    @property
    def wraps(self) -> bool:
        """True when the arc contains point 0 (the gap between 2n and 1)."""
        return self.tail > self.head


def contains_position(a: Arc, p: Fraction | int) -> bool:
    if a.tail < a.head:
        return a.tail < p < a.head
    return p > a.tail or p < a.head


def arcs_intersect(a: Arc, b: Arc) -> bool:
    # two open arcs meet iff one starts strictly inside the other
    return contains_position(a, b.tail) or contains_position(b, a.tail)


def gap_midpoint(j: int, n: int) -> Fraction:
    """Midpoint of gap ``j`` (``0 <= j < 2n``) of a model with ``n`` arcs."""
    if not 0 <= j < 2 * n:
        raise ValueError(f"gap index {j} out of range for n={n}")
    return Fraction(2 * n if j == 0 else j) + HALF


def sample_points(n: int) -> list[Fraction]:
    """The 4n points on which every covering/containment predicate is decided."""
    pts: list[Fraction] = []
    for i in range(1, 2 * n + 1):
        pts.append(Fraction(i))
        pts.append(Fraction(i) + HALF)
    return pts


def _sample_masks(arcs: Sequence[Arc], n: int) -> list[int]:
    """Bit ``i`` of an arc's mask is set when sample point ``i`` lies in the arc."""
    pts = sample_points(n)
    return [sum(1 << i for i, p in enumerate(pts) if contains_position(a, p)) for a in arcs]


def covers_circle(arcs: Iterable[Arc], n: int | None = None) -> bool:
    """True iff the union of ``arcs`` is the whole circle.

    ``n`` is the arc count of the enclosing model; when omitted the circle is
    assumed to end at the largest endpoint that appears.
    """
    arcs = list(arcs)
    if not arcs:
        return False
    if n is None:
        top = max(max(a.tail, a.head) for a in arcs)
        n = (top + 1) // 2
    union = 0
    for mask in _sample_masks(arcs, n):
        union |= mask
    return union == (1 << 4 * n) - 1


def _in_closure(a: Arc, p: Fraction | int) -> bool:
    return p == a.tail or p == a.head or contains_position(a, p)


def properly_contains(a: Arc, b: Arc) -> bool:
    """True iff the point set of ``b`` is a proper subset of that of ``a``."""
    if (a.tail, a.head) == (b.tail, b.head):
        return False
    return (
        _in_closure(a, b.tail)
        and _in_closure(a, b.head)
        and not contains_position(b, a.tail)
        and not contains_position(b, a.head)
        and contains_position(a, b.tail + Fraction(1, 4))
    )


@dataclass(frozen=True)
class CircularArcModel:
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], *, check: bool = True) -> CircularArcModel:
        """Build from ``(id, tail, head)`` triples."""
        m = cls(tuple(Arc(i, int(t), int(h)) for i, t, h in pairs))
        if check:
            check_model(m)
        return m

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def ids(self) -> list:
        return [a.id for a in self.arcs]

    def arc(self, vid: Hashable) -> Arc:
        for a in self.arcs:
            if a.id == vid:
                return a
        raise KeyError(vid)

    def gap_midpoints(self) -> list[Fraction]:
        return [gap_midpoint(j, self.n) for j in range(2 * self.n)]


def validate_model(m: CircularArcModel) -> list[str]:
    """Return every violation found in ``m``; an empty list means valid."""
    problems: list[str] = []
    n = m.n
    if n < 1:
        return ["model has no arcs"]
    seen_ids: set = set()
    owner: dict[int, Hashable] = {}
    for a in m.arcs:
        if a.id in seen_ids:
            problems.append(f"duplicate arc id {a.id!r}")
        seen_ids.add(a.id)
        ends = (a.tail, a.head)
        if a.tail == a.head:
            problems.append(f"arc {a.id!r}: tail equals head ({a.tail})")
            ends = (a.tail,)
        for e in ends:
            if not 1 <= e <= 2 * n:
                problems.append(f"arc {a.id!r}: endpoint {e} out of range 1..{2 * n}")
            elif e in owner:
                problems.append(f"arc {a.id!r}: duplicate endpoint {e} (also used by {owner[e]!r})")
            else:
                owner[e] = a.id
    return problems


def check_model(m: CircularArcModel) -> CircularArcModel:
    problems = validate_model(m)
    if problems:
        raise ModelError("invalid circular-arc model: " + "; ".join(problems), problems)
    return m


def is_normal(m: CircularArcModel) -> bool:
    full = (1 << 4 * m.n) - 1
    masks = _sample_masks(m.arcs, m.n)
    return not any(a | b == full for a, b in combinations(masks, 2))


def is_normal_helly(m: CircularArcModel) -> bool:
    """No family of at most three arcs covers the circle."""
    full = (1 << 4 * m.n) - 1
    masks = _sample_masks(m.arcs, m.n)
    if any(a == full for a in masks):
        return False
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            ab = a | masks[j]
            if ab == full:
                return False
            for c in masks[j + 1 :]:
                if ab | c == full:
                    return False
    return True


def intersection_graph(m: CircularArcModel) -> Graph:
    edges = [
        (a.id, b.id) for a, b in combinations(m.arcs, 2) if arcs_intersect(a, b)
    ]
    return Graph.from_edges(m.ids, edges)


def dominates(g: Graph, v: Hashable, w: Hashable) -> bool:
    """``v`` is adjacent to ``w`` and every other neighbor of ``w`` is one of ``v``."""
    nv, nw = g.neighbors(v), g.neighbors(w)
    if v == w:
        raise ValueError("a vertex is compared with itself")
    return w in nv and (nw - {v}) <= nv


def _renumber(points: list[tuple[Fraction, int, str]], arcs: Sequence[Arc]) -> CircularArcModel:
    """Map fractional endpoint positions back to the integer circle 1..2n."""
    points.sort(key=lambda t: t[0])
    tails: dict[int, int] = {}
    heads: dict[int, int] = {}
    for rank, (_, idx, role) in enumerate(points, start=1):
        (tails if role == "t" else heads)[idx] = rank
    return CircularArcModel(
        tuple(Arc(a.id, tails[i], heads[i]) for i, a in enumerate(arcs))
    )


def _intersection_bounds(av: Arc, aw: Arc) -> tuple[Fraction, Fraction]:
    """Endpoints of ``aw ∩ av`` nudged inward by 1/4 where a new endpoint is needed."""
    q = Fraction(1, 4)
    w_tail_in = contains_position(av, aw.tail)
    v_tail_in = contains_position(aw, av.tail)
    if w_tail_in and v_tail_in:
        raise ModelError("domination not realizable in this model: A_w ∩ A_v is disconnected")
    if w_tail_in:
        return Fraction(aw.tail), av.head - q
    if v_tail_in:
        return av.tail + q, Fraction(aw.head)
    if properly_contains(aw, av):
        return av.tail + q, av.head - q
    raise ModelError("domination not realizable in this model: A_w ∩ A_v is empty")


def shrink_dominated(m: CircularArcModel) -> CircularArcModel:
    """Replace the first dominated arc that is not already nested in its
    dominator by its intersection with the dominator.

    Pairs are scanned in arc order. Arcs already nested either way are skipped
    so that repeated application terminates on twins. The result is verified
    to have the same intersection graph.
    """
    g = intersection_graph(m)
    for v in m.arcs:
        for wi, w in enumerate(m.arcs):
            if v is w or not dominates(g, v.id, w.id):
                continue
            if properly_contains(v, w) or properly_contains(w, v):
                continue
            lo, hi = _intersection_bounds(v, w)
            points: list[tuple[Fraction, int, str]] = []
            for i, a in enumerate(m.arcs):
                t, h = (lo, hi) if i == wi else (Fraction(a.tail), Fraction(a.head))
                # keep positions in [1, 2n+1) so the linear sort is the clockwise order
                if t < 1:
                    t += 2 * m.n
                if h < 1:
                    h += 2 * m.n
                points.append((t, i, "t"))
                points.append((h, i, "h"))
            out = _renumber(points, m.arcs)
            if intersection_graph(out) != g:
                raise ModelError(
                    f"domination not realizable in this model: shrinking {w.id!r} into {v.id!r} changes the graph"
                )
            return out
    return m
