"""Derive the frozen thick-spider grid models in src/arcbend/data/.

S3 (one bend, general grid) is laid out by hand around a single row.

S6 and S7 on a rectangle come from one circular-arc pattern: around the
circle, stable vertex s_j holds the head of c_{j+1}, optionally a rectangle
corner, then the tail of c_{j-1}. Each c_i therefore runs from inside
s_{i+1} to inside s_{i-1}, and it bends once per corner lying in the stable
arcs it fully covers. Corners go in stable arcs {1,2,4,5} for S6 (every
window of three consecutive stable arcs holds at most two corners) and
{1,2,4,6} for S7 (every window of four holds at most three).

S7 with two bends on a general grid was found by a seeded annealing search
over paths of at most two bends on an 11x11 lattice (``--search`` reruns it;
it takes a few minutes). The coordinates it produced are frozen below.

Usage: python scripts/derive_spider_fixtures.py [--search] [--out DIR]
"""

from __future__ import annotations

import argparse
import math
import random
from fractions import Fraction
from pathlib import Path

from arcbend.circle import Arc, CircularArcModel
from arcbend.families import thick_spider
from arcbend.formats import emit_paths
from arcbend.grid import GridModel, epg_intersection_graph, max_bends, paths_from, validate_epr
from arcbend.transforms import embed_on_rectangle

S3_B1EPG = {
    "s1": [(0, 0), (0, 2)],
    "s2": [(0, 4), (0, 6)],
    "s3": [(1, 3), (4, 3)],
    "c1": [(0, 5), (0, 3), (3, 3)],
    "c2": [(0, 1), (0, 3), (3, 3)],
    "c3": [(0, 1), (0, 5)],
}

S7_B2EPG = {
    "c1": [(2, 6), (9, 6), (9, 3), (5, 3)],
    "c2": [(0, 1), (0, 6), (9, 6), (9, 1)],
    "c3": [(0, 2), (0, 6), (7, 6), (7, 1)],
    "c4": [(2, 3), (9, 3), (9, 6), (3, 6)],
    "c5": [(0, 9), (0, 3), (8, 3), (8, 8)],
    "c6": [(1, 9), (0, 9), (0, 3), (8, 3)],
    "c7": [(10, 3), (1, 3), (1, 6), (6, 6)],
    "s1": [(2, 1), (0, 1), (0, 3), (5, 3)],
    "s2": [(6, 8), (6, 3), (7, 3), (7, 0)],
    "s3": [(7, 3), (9, 3), (9, 4)],
    "s4": [(0, 8), (0, 6), (3, 6)],
    "s5": [(3, 6), (5, 6), (5, 9), (0, 9)],
    "s6": [(5, 6), (8, 6), (8, 8)],
    "s7": [(9, 4), (9, 5), (0, 5), (0, 6)],
}


def spider_on_rectangle(n: int, corner_arcs: set[int]) -> GridModel:
    seq: list[tuple[str, str]] = []
    corner_after: list[int] = []
    for j in range(1, n + 1):
        nxt = j % n + 1
        prv = (j - 2) % n + 1
        seq.append((f"s{j}", "t"))
        seq.append((f"c{nxt}", "h"))
        if j in corner_arcs:
            corner_after.append(len(seq))
        seq.append((f"c{prv}", "t"))
        seq.append((f"s{j}", "h"))
    ends: dict[str, dict[str, int]] = {}
    for pos, (vid, role) in enumerate(seq, start=1):
        ends.setdefault(vid, {})[role] = pos
    ids = [f"c{i}" for i in range(1, n + 1)] + [f"s{i}" for i in range(1, n + 1)]
    model = CircularArcModel(tuple(Arc(v, ends[v]["t"], ends[v]["h"]) for v in ids))
    corners = [Fraction(p) + Fraction(1, 2) for p in corner_after]
    return embed_on_rectangle(model, corners)[0]


def anneal_s7(grid: int = 10, seed: int = 4, n: int = 7, bends: int = 2) -> dict:
    rnd = random.Random(seed)
    eid: dict = {}

    def edge(a, b):
        key = (min(a, b), max(a, b))
        return eid.setdefault(key, len(eid))

    def mask(corners):
        m = 0
        for (r1, c1), (r2, c2) in zip(corners, corners[1:]):
            if r1 == r2:
                es = [edge((r1, c), (r1, c + 1)) for c in range(min(c1, c2), max(c1, c2))]
            else:
                es = [edge((r, c1), (r + 1, c1)) for r in range(min(r1, r2), max(r1, r2))]
            for e in es:
                if m >> e & 1:
                    return None
                m |= 1 << e
        return m

    def randpath():
        while True:
            b = rnd.randint(0, bends)
            horiz = rnd.random() < 0.5
            p = [(rnd.randint(0, grid), rnd.randint(0, grid))]
            for _ in range(b + 1):
                r, c = p[-1]
                if horiz:
                    c2 = rnd.randint(0, grid)
                    if c2 == c:
                        break
                    p.append((r, c2))
                else:
                    r2 = rnd.randint(0, grid)
                    if r2 == r:
                        break
                    p.append((r2, c))
                horiz = not horiz
            else:
                m = mask(p)
                if m:
                    return p, m

    def want(u, v):
        if u < n and v < n:
            return True
        if u >= n and v >= n:
            return False
        i, j = (u, v - n) if u < n else (v, u - n)
        return i != j

    wanted = [[want(u, v) for v in range(2 * n)] for u in range(2 * n)]
    paths = [randpath() for _ in range(2 * n)]

    def cost(u, m):
        return sum(1 for v in range(2 * n) if v != u and bool(m & paths[v][1]) != wanted[u][v])

    cur = sum(cost(u, paths[u][1]) for u in range(2 * n)) // 2
    temp = 2.0
    for _ in range(3_000_000):
        u = rnd.randrange(2 * n)
        new = randpath()
        d = cost(u, new[1]) - cost(u, paths[u][1])
        if d <= 0 or rnd.random() < math.exp(-d / temp):
            paths[u] = new
            cur += d
            if cur == 0:
                names = [f"c{i}" for i in range(1, n + 1)] + [f"s{i}" for i in range(1, n + 1)]
                return {names[u]: paths[u][0] for u in range(2 * n)}
        temp = max(0.05, temp * 0.999997)
    raise RuntimeError("annealing did not converge")


def check(name: str, model: GridModel, n: int, bound: int, rect: bool) -> None:
    assert epg_intersection_graph(model) == thick_spider(n), name
    assert max_bends(model) <= bound, name
    assert not rect or validate_epr(model), name


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--search", action="store_true", help="rerun the S7 two-bend grid search")
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src/arcbend/data")
    args = ap.parse_args()

    s7g = anneal_s7() if args.search else S7_B2EPG
    fixtures = {
        "s3_b1epg": (GridModel(tuple(paths_from(S3_B1EPG.items()))), 3, 1, False),
        "s6_b2epr": (spider_on_rectangle(6, {1, 2, 4, 5}), 6, 2, True),
        "s7_b3epr": (spider_on_rectangle(7, {1, 2, 4, 6}), 7, 3, True),
        "s7_b2epg": (GridModel(tuple(paths_from(s7g.items()))), 7, 2, False),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (model, n, bound, rect) in fixtures.items():
        check(name, model, n, bound, rect)
        (args.out / f"{name}.paths").write_text(emit_paths(model))
        print(f"wrote {name}.paths  ({len(model.paths)} paths, max bends {max_bends(model)})")


if __name__ == "__main__":
    main()
