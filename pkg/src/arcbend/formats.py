"""Line-based text formats: ``.arcs``, ``.paths`` and ``.graph``.

``.arcs``::

    arcs <n>
    arc <id> <tail> <head>        (n lines, endpoints 1..2n)

``.paths``::

    paths <n> [rect <r1> <r2> <c1> <c2>]
    path <id> (r,c) (r,c) ...     (n lines, corners only)

``.graph``::

    graph <n> <m>
    vertex <id>                   (n lines)
    edge <u> <v>                  (m lines)

Blank lines and lines starting with ``#`` are ignored. Parsers collect every
problem with its line number before raising :class:`FormatError`.
"""

from __future__ import annotations

import re

from .circle import Arc, CircularArcModel, validate_model
from .graph import Graph, GraphError
from .grid import GridModel, GridPath, GridPoint, PathError, Rect

_POINT = re.compile(r"^\((-?\d+),(-?\d+)\)$")
_TOKEN = re.compile(r"^[!-~]+$")


class FormatError(ValueError):
    def __init__(self, diagnostics: list[tuple[int, str]]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(f"line {ln}: {msg}" for ln, msg in diagnostics))


def _lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield ln, line.split()


def _bad_id(tok: str, ln: int, diags) -> bool:
    if _TOKEN.match(tok):
        return False
    diags.append((ln, f"id {tok!r} is not a printable ASCII token"))
    return True


def natural_key(v) -> tuple:
    s = str(v)
    return tuple((0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", s) if t)


def _header(rows, word: str, nargs: int, diags) -> list[int] | None:
    if not rows:
        diags.append((1, f"missing '{word}' header"))
        return None
    ln, toks = rows[0]
    if toks[0] != word or len(toks) < 1 + nargs:
        diags.append((ln, f"expected '{word}' header"))
        return None
    try:
        return [int(t) for t in toks[1 : 1 + nargs]]
    except ValueError:
        diags.append((ln, "header counts must be integers"))
        return None


# -- arcs ---------------------------------------------------------------


def parse_arcs(text: str) -> CircularArcModel:
    rows = list(_lines(text))
    diags: list[tuple[int, str]] = []
    head = _header(rows, "arcs", 1, diags)
    if head is None:
        raise FormatError(diags)
    (n,) = head
    arcs: list[Arc] = []
    lines_of: dict = {}
    for ln, toks in rows[1:]:
        if len(toks) != 4 or toks[0] != "arc":
            diags.append((ln, "malformed line, expected 'arc <id> <tail> <head>'"))
            continue
        if _bad_id(toks[1], ln, diags):
            continue
        try:
            t, h = int(toks[2]), int(toks[3])
        except ValueError:
            diags.append((ln, "endpoints must be integers"))
            continue
        arcs.append(Arc(toks[1], t, h))
        lines_of.setdefault(toks[1], ln)
    if len(arcs) != n and not diags:
        diags.append((rows[0][0], f"header declares {n} arcs but {len(arcs)} were given"))
    if not diags:
        m = CircularArcModel(tuple(arcs))
        for problem in validate_model(m):
            vid = problem.split("'")[1] if "'" in problem else None
            diags.append((lines_of.get(vid, rows[0][0]), problem))
        if not diags:
            return m
    raise FormatError(diags)


def emit_arcs(m: CircularArcModel) -> str:
    out = [f"arcs {m.n}"]
    out += [f"arc {a.id} {a.tail} {a.head}" for a in m.arcs]
    return "\n".join(out) + "\n"


# -- paths --------------------------------------------------------------


def parse_paths(text: str) -> GridModel:
    rows = list(_lines(text))
    diags: list[tuple[int, str]] = []
    head = _header(rows, "paths", 1, diags)
    if head is None:
        raise FormatError(diags)
    (n,) = head
    rect = None
    htoks = rows[0][1]
    if len(htoks) > 2:
        if len(htoks) != 7 or htoks[2] != "rect":
            diags.append((rows[0][0], "expected 'rect <r1> <r2> <c1> <c2>' after the count"))
        else:
            try:
                rect = Rect(*(int(t) for t in htoks[3:]))
            except (ValueError, PathError) as exc:
                diags.append((rows[0][0], f"bad rectangle: {exc}"))
    paths: list[GridPath] = []
    for ln, toks in rows[1:]:
        if len(toks) < 3 or toks[0] != "path":
            diags.append((ln, "malformed line, expected 'path <id> (r,c) (r,c) ...'"))
            continue
        if _bad_id(toks[1], ln, diags):
            continue
        pts = []
        for tok in toks[2:]:
            mt = _POINT.match(tok)
            if not mt:
                diags.append((ln, f"bad point {tok!r}"))
                break
            pts.append(GridPoint(int(mt.group(1)), int(mt.group(2))))
        else:
            try:
                paths.append(GridPath(toks[1], tuple(pts)))
            except PathError as exc:
                diags.append((ln, str(exc)))
    if not diags and len(paths) != n:
        diags.append((rows[0][0], f"header declares {n} paths but {len(paths)} were given"))
    if not diags:
        try:
            return GridModel(tuple(paths), rect)
        except PathError as exc:
            diags.append((rows[0][0], str(exc)))
    raise FormatError(diags)


def emit_paths(m: GridModel) -> str:
    head = f"paths {len(m.paths)}"
    if m.rect is not None:
        r = m.rect
        head += f" rect {r.r1} {r.r2} {r.c1} {r.c2}"
    out = [head]
    for p in sorted(m.paths, key=lambda p: natural_key(p.id)):
        pts = " ".join(f"({pt.row},{pt.col})" for pt in p.corners)
        out.append(f"path {p.id} {pts}")
    return "\n".join(out) + "\n"


# -- graph --------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    rows = list(_lines(text))
    diags: list[tuple[int, str]] = []
    head = _header(rows, "graph", 2, diags)
    if head is None:
        raise FormatError(diags)
    n, m = head
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for ln, toks in rows[1:]:
        if toks[0] == "vertex" and len(toks) == 2:
            if not _bad_id(toks[1], ln, diags):
                verts.append(toks[1])
        elif toks[0] == "edge" and len(toks) == 3:
            edges.append((toks[1], toks[2]))
        else:
            diags.append((ln, "malformed line, expected 'vertex <id>' or 'edge <u> <v>'"))
    if not diags and len({frozenset(e) for e in edges}) != len(edges):
        diags.append((rows[0][0], "duplicate edge"))
    if not diags and (len(verts) != n or len(edges) != m):
        diags.append((rows[0][0], f"header declares {n} vertices / {m} edges, found {len(verts)} / {len(edges)}"))
    if not diags:
        try:
            return Graph.from_edges(verts, edges)
        except GraphError as exc:
            diags.append((rows[0][0], str(exc)))
    raise FormatError(diags)


def emit_graph(g: Graph) -> str:
    out = [f"graph {len(g.vertices)} {len(g.edges)}"]
    out += [f"vertex {v}" for v in g.vertices]
    out += [f"edge {u} {v}" for u, v in g.edge_list()]
    return "\n".join(out) + "\n"
