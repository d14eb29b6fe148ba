"""Paths on a rectangular grid and their edge-intersection graphs."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import NamedTuple

from .graph import Graph


class PathError(ValueError):
    pass


class GridPoint(NamedTuple):
    row: int
    col: int


Edge = tuple[GridPoint, GridPoint]


def _unit_edges(a: GridPoint, b: GridPoint) -> list[Edge]:
    if a.row == b.row:
        lo, hi = sorted((a.col, b.col))
        pts = [GridPoint(a.row, c) for c in range(lo, hi + 1)]
    else:
        lo, hi = sorted((a.row, b.row))
        pts = [GridPoint(r, a.col) for r in range(lo, hi + 1)]
    return list(zip(pts, pts[1:]))


def _horizontal(a: GridPoint, b: GridPoint) -> bool:
    return a.row == b.row


@dataclass(frozen=True)
class GridPath:
    """A lattice path stored by its corners: two endpoints plus one entry per bend."""

    id: Hashable
    corners: tuple[GridPoint, ...]
    _edges: frozenset = field(init=False, repr=False, compare=False, default=frozenset())

    def __post_init__(self) -> None:
        pts = tuple(GridPoint(int(r), int(c)) for r, c in self.corners)
        object.__setattr__(self, "corners", pts)
        object.__setattr__(self, "_edges", validate_path(self))


def validate_path(p: GridPath) -> frozenset[Edge]:
    """Raise :class:`PathError` on a malformed path, else return its unit edges."""
    pts = p.corners
    if len(pts) < 2:
        raise PathError(f"path {p.id!r}: needs at least two corners")
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise PathError(f"path {p.id!r}: zero-length segment at {tuple(a)}")
        if a.row != b.row and a.col != b.col:
            raise PathError(f"path {p.id!r}: diagonal segment {tuple(a)} -> {tuple(b)}")
    for a, b, c in zip(pts, pts[1:], pts[2:]):
        if _horizontal(a, b) == _horizontal(b, c):
            raise PathError(f"path {p.id!r}: corner {tuple(b)} is not a bend")
    return _collect_edges(p)


def bend_count(p: GridPath) -> int:
    return len(p.corners) - 2


def edge_set(p: GridPath) -> frozenset[Edge]:
    return p._edges


def _collect_edges(p: GridPath) -> frozenset[Edge]:
    seen: set[Edge] = set()
    for a, b in zip(p.corners, p.corners[1:]):
        for e in _unit_edges(a, b):
            if e in seen:
                raise PathError(f"path {p.id!r}: path not simple (edge {e} used twice)")
            seen.add(e)
    return frozenset(seen)


def path_points(p: GridPath) -> list[GridPoint]:
    """Every lattice point visited, in order."""
    out = [p.corners[0]]
    for a, b in zip(p.corners, p.corners[1:]):
        dr = (b.row > a.row) - (b.row < a.row)
        dc = (b.col > a.col) - (b.col < a.col)
        cur = a
        while cur != b:
            cur = GridPoint(cur.row + dr, cur.col + dc)
            out.append(cur)
    return out


@dataclass(frozen=True)
class Rect:
    """Rectangle given by its two rows and two columns."""

    r1: int
    r2: int
    c1: int
    c2: int

    def __post_init__(self) -> None:
        if not (self.r1 < self.r2 and self.c1 < self.c2):
            raise PathError(f"degenerate rectangle {self}")

    def on_perimeter(self, e: Edge) -> bool:
        a, b = e
        if a.row == b.row:
            return a.row in (self.r1, self.r2) and self.c1 <= min(a.col, b.col) and max(a.col, b.col) <= self.c2
        return a.col in (self.c1, self.c2) and self.r1 <= min(a.row, b.row) and max(a.row, b.row) <= self.r2


@dataclass(frozen=True)
class GridModel:
    """A set of grid paths; with ``rect`` set the model is an EPR model."""

    paths: tuple[GridPath, ...]
    rect: Rect | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", tuple(self.paths))
        ids = [p.id for p in self.paths]
        if len(set(ids)) != len(ids):
            raise PathError("duplicate path ids")

    @property
    def mode(self) -> str:
        return "EPR" if self.rect is not None else "EPG"

    @property
    def ids(self) -> list:
        return [p.id for p in self.paths]

    def path(self, pid: Hashable) -> GridPath:
        for p in self.paths:
            if p.id == pid:
                return p
        raise KeyError(pid)


def epg_intersection_graph(m: GridModel) -> Graph:
    # bitmask of the paths using each edge, then OR them per path
    users: dict[Edge, int] = {}
    for i, p in enumerate(m.paths):
        for e in edge_set(p):
            users[e] = users.get(e, 0) | (1 << i)
    pairs = []
    for i, p in enumerate(m.paths):
        mask = 0
        for e in edge_set(p):
            mask |= users[e]
        mask >>= i + 1
        j = i + 1
        while mask:
            if mask & 1:
                pairs.append((p.id, m.paths[j].id))
            mask >>= 1
            j += 1
    return Graph.from_edges(m.ids, pairs)


def shared_edges(m: GridModel) -> set[Edge]:
    """Grid edges used by at least two paths."""
    count: dict[Edge, int] = {}
    for p in m.paths:
        for e in edge_set(p):
            count[e] = count.get(e, 0) + 1
    return {e for e, c in count.items() if c > 1}


def validate_epr(m: GridModel) -> bool:
    if m.rect is None:
        return False
    return all(m.rect.on_perimeter(e) for p in m.paths for e in edge_set(p))


def max_bends(m: GridModel) -> int:
    return max((bend_count(p) for p in m.paths), default=0)


def transform_model(m: GridModel, f) -> GridModel:
    """Apply a point map ``f`` to every corner (used for symmetry checks)."""
    paths = tuple(GridPath(p.id, tuple(GridPoint(*f(pt)) for pt in p.corners)) for p in m.paths)
    return GridModel(paths, None)


# -- induced C4 configurations in 1-bend models ------------------------------


class C4Kind(str, Enum):
    TRUE_PIE = "TruePie"
    FALSE_PIE = "FalsePie"
    FRAME = "Frame"


@dataclass(frozen=True)
class C4Shape:
    kind: C4Kind
    points: tuple[GridPoint, ...]  # the pie center, or the four frame corners


def _bend_point(p: GridPath) -> GridPoint | None:
    return p.corners[1] if bend_count(p) == 1 else None


def classify_c4(paths: Sequence[GridPath]) -> C4Shape:
    """Classify four paths of at most one bend whose edge-intersection graph is
    an induced 4-cycle as a true pie, a false pie or a frame."""
    paths = list(paths)
    if len(paths) != 4:
        raise PathError("not a B1 C4 witness: expected four paths")
    if any(bend_count(p) > 1 for p in paths):
        raise PathError("not a B1 C4 witness: a path has more than one bend")
    g = epg_intersection_graph(GridModel(tuple(paths)))
    if not (len(g.edges) == 4 and all(g.degree(v) == 2 for v in g.vertices)):
        raise PathError("not a B1 C4 witness: paths do not induce a 4-cycle")

    common = set(path_points(paths[0]))
    for p in paths[1:]:
        common &= set(path_points(p))
    for center in sorted(common):
        bent = [p for p in paths if _bend_point(p) == center]
        straight = [p for p in paths if p not in bent and center in path_points(p)[1:-1]]
        if len(bent) == 4:
            return C4Shape(C4Kind.TRUE_PIE, (center,))
        if len(bent) == 2 and len(straight) == 2:
            return C4Shape(C4Kind.FALSE_PIE, (center,))

    bends = [_bend_point(p) for p in paths]
    if all(b is not None for b in bends):
        rows = {b.row for b in bends}
        cols = {b.col for b in bends}
        if len(rows) == 2 and len(cols) == 2 and len(set(bends)) == 4:
            return C4Shape(C4Kind.FRAME, tuple(sorted(bends)))
    raise PathError("not a B1 C4 witness: configuration is neither a pie nor a frame")


def paths_from(items: Iterable[tuple[Hashable, Sequence[tuple[int, int]]]]) -> list[GridPath]:
    return [GridPath(pid, tuple(GridPoint(*c) for c in corners)) for pid, corners in items]
