"""Deterministic SVG and ASCII drawings of grid models."""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from .grid import GridModel, edge_set

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)
CELL = 40
MARGIN = 30
JITTER = 3.0


def _bounds(m: GridModel) -> tuple[int, int]:
    rows = [pt.row for p in m.paths for pt in p.corners]
    cols = [pt.col for p in m.paths for pt in p.corners]
    if m.rect is not None:
        rows += [m.rect.r1, m.rect.r2]
        cols += [m.rect.c1, m.rect.c2]
    return max(rows, default=1), max(cols, default=1)


def path_offsets(m: GridModel) -> list[float]:
    """Per-path shift, distinct for every path, so shared edges stay visible."""
    k = len(m.paths)
    return [round((i - (k - 1) / 2) * JITTER, 3) for i in range(k)]


def render_svg(m: GridModel) -> str:
    max_r, max_c = _bounds(m)
    width = 2 * MARGIN + CELL * max_c
    height = 2 * MARGIN + CELL * max_r
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g class="grid" stroke="#dddddd" stroke-width="1">',
    ]
    for r in range(max_r + 1):
        y = MARGIN + CELL * r
        out.append(f'<line x1="{MARGIN}" y1="{y}" x2="{MARGIN + CELL * max_c}" y2="{y}"/>')
    for c in range(max_c + 1):
        x = MARGIN + CELL * c
        out.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{MARGIN + CELL * max_r}"/>')
    out.append("</g>")
    if m.rect is not None:
        r = m.rect
        out.append(
            f'<rect class="frame" x="{MARGIN + CELL * r.c1}" y="{MARGIN + CELL * r.r1}" '
            f'width="{CELL * (r.c2 - r.c1)}" height="{CELL * (r.r2 - r.r1)}" '
            'fill="none" stroke="#999999" stroke-dasharray="4 4"/>'
        )
    for i, (p, off) in enumerate(zip(m.paths, path_offsets(m))):
        pts = " ".join(
            f"{MARGIN + CELL * pt.col + off:g},{MARGIN + CELL * pt.row + off:g}" for pt in p.corners
        )
        color = PALETTE[i % len(PALETTE)]
        out.append(
            f'<polyline data-id={quoteattr(str(p.id))} points="{pts}" fill="none" '
            f'stroke="{color}" stroke-width="2"><title>{escape(str(p.id))}</title></polyline>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _label(i: int) -> str:
    alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
    return alphabet[i] if i < len(alphabet) else "*"


def render_ascii(m: GridModel) -> str:
    """Lattice points are ``+`` (visited) or ``.``; an edge used by one path
    shows that path's letter, shared edges show ``#``."""
    max_r, max_c = _bounds(m)
    canvas = [[" "] * (2 * max_c + 1) for _ in range(2 * max_r + 1)]
    for r in range(max_r + 1):
        for c in range(max_c + 1):
            canvas[2 * r][2 * c] = "."
    users: dict = {}
    for i, p in enumerate(m.paths):
        for a, b in edge_set(p):
            users.setdefault((a, b), []).append(i)
    for (a, b), who in users.items():
        ch = _label(who[0]) if len(who) == 1 else "#"
        canvas[a.row + b.row][a.col + b.col] = ch
        canvas[2 * a.row][2 * a.col] = "+"
        canvas[2 * b.row][2 * b.col] = "+"
    lines = ["".join(row).rstrip() for row in canvas]
    legend = [f"{_label(i)} = {p.id}" for i, p in enumerate(m.paths)]
    return "\n".join(lines + [""] + legend) + "\n"
