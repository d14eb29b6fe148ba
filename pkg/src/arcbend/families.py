"""Graph families, their canonical arc models and the spider fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .circle import Arc, CircularArcModel, check_model, intersection_graph, is_normal
from .formats import parse_paths
from .graph import Graph
from .grid import GridModel


def cycle_power(n: int, k: int) -> Graph:
    """The k-th power of the cycle on v1..vn."""
    if n < 3 or k < 1:
        raise ValueError(f"cycle_power needs n >= 3 and k >= 1, got n={n}, k={k}")
    verts = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if min(j - i, n - (j - i)) <= k:
                edges.append((verts[i], verts[j]))
    return Graph.from_edges(verts, edges)


def _wrap(x: int, two_n: int) -> int:
    return (x - 1) % two_n + 1


def canonical_cycle_power_model(n: int, k: int) -> CircularArcModel:
    """Arcs ``(2i - 1, 2i + 2k)`` taken modulo 2n, i = 1..n.

    Tails are the odd endpoints and heads the even ones, so each arc holds
    exactly 2k endpoints.
    """
    if k < 1 or not 2 * k + 1 < n:
        raise ValueError(f"canonical model needs k >= 1 and 2k + 1 < n, got n={n}, k={k}")
    two_n = 2 * n
    arcs = tuple(
        Arc(f"v{i}", _wrap(2 * i - 1, two_n), _wrap(2 * i + 2 * k, two_n)) for i in range(1, n + 1)
    )
    return check_model(CircularArcModel(arcs))


def thick_spider(n: int) -> Graph:
    """Clique c1..cn, stable set s1..sn, and ci ~ sj exactly when i != j."""
    if n < 2:
        raise ValueError(f"thick_spider needs n >= 2, got {n}")
    cs = [f"c{i}" for i in range(1, n + 1)]
    ss = [f"s{i}" for i in range(1, n + 1)]
    edges = [(cs[i], cs[j]) for i in range(n) for j in range(i + 1, n)]
    edges += [(cs[i], ss[j]) for i in range(n) for j in range(n) if i != j]
    return Graph.from_edges(cs + ss, edges)


def random_ca_model(seed: int, n: int) -> CircularArcModel:
    """Uniform random pairing of the 2n endpoints into tail/head pairs."""
    if n < 1:
        raise ValueError("random_ca_model needs n >= 1")
    rng = random.Random(seed)
    ends = list(range(1, 2 * n + 1))
    rng.shuffle(ends)
    arcs = tuple(Arc(f"v{i + 1}", ends[2 * i], ends[2 * i + 1]) for i in range(n))
    return check_model(CircularArcModel(arcs))


def random_interval_model(seed: int, n: int) -> CircularArcModel:
    """Random model in which no arc contains point 0, so its graph is an interval graph."""
    if n < 1:
        raise ValueError("random_interval_model needs n >= 1")
    rng = random.Random(seed)
    ends = list(range(1, 2 * n + 1))
    rng.shuffle(ends)
    arcs = tuple(
        Arc(f"v{i + 1}", min(ends[2 * i], ends[2 * i + 1]), max(ends[2 * i], ends[2 * i + 1]))
        for i in range(n)
    )
    return check_model(CircularArcModel(arcs))


def random_short_arc_model(seed: int, n: int, max_fraction: float = 0.6) -> CircularArcModel:
    """Arcs with uniform random start and length at most ``max_fraction`` of
    the circle, discretized by sorting the endpoints.

    With ``max_fraction <= 1/2`` the model is always normal and with
    ``max_fraction <= 1/3`` always normal Helly.
    """
    if n < 1:
        raise ValueError("random_short_arc_model needs n >= 1")
    rng = random.Random(seed)
    events = []
    for i in range(n):
        start = rng.random()
        length = rng.uniform(0.02, max_fraction)
        events.append((start, i, "t"))
        events.append(((start + length) % 1.0, i, "h"))
    events.sort()
    ends: dict[int, dict[str, int]] = {}
    for rank, (_, i, role) in enumerate(events, start=1):
        ends.setdefault(i, {})[role] = rank
    arcs = tuple(Arc(f"v{i + 1}", ends[i]["t"], ends[i]["h"]) for i in range(n))
    return check_model(CircularArcModel(arcs))


def random_normal_model(seed: int, n: int, *, max_tries: int = 10_000) -> CircularArcModel:
    """Rejection-sample length-bounded random models until one is normal."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        m = random_short_arc_model(rng.getrandbits(64), n, 0.6)
        if is_normal(m):
            return m
    raise RuntimeError(f"no normal model found for n={n} within {max_tries} tries")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    k: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "cycle-power":
            if self.n < 3 or self.k is None or self.k < 1:
                raise ValueError("cycle-power requires n >= 3 and k >= 1")
        elif self.kind == "thick-spider":
            if self.n < 2:
                raise ValueError("thick-spider requires n >= 2")
        elif self.kind in ("interval", "random-ca"):
            if self.n < 1:
                raise ValueError(f"{self.kind} requires n >= 1")
        else:
            raise ValueError(f"unknown family {self.kind!r}")

    def graph(self) -> Graph:
        if self.kind == "cycle-power":
            return cycle_power(self.n, self.k)
        if self.kind == "thick-spider":
            return thick_spider(self.n)
        return intersection_graph(self.model())

    def model(self) -> CircularArcModel:
        seed = 0 if self.seed is None else self.seed
        if self.kind == "cycle-power":
            return canonical_cycle_power_model(self.n, self.k)
        if self.kind == "interval":
            return random_interval_model(seed, self.n)
        if self.kind == "random-ca":
            return random_ca_model(seed, self.n)
        raise ValueError(f"no arc model generator for {self.kind!r}")


class SpiderFixture(str, Enum):
    S3_B1EPG = "S3_B1EPG"
    S6_B2EPR = "S6_B2EPR"
    S7_B3EPR = "S7_B3EPR"
    S7_B2EPG = "S7_B2EPG"

    @property
    def spider_size(self) -> int:
        return int(self.value[1])

    @property
    def bend_bound(self) -> int:
        return int(self.value[4])

    @property
    def rectangular(self) -> bool:
        return self.value.endswith("EPR")


def spider_fixture(which: SpiderFixture | str) -> GridModel:
    """Frozen grid model for a thick spider; regenerate with
    ``scripts/derive_spider_fixtures.py``."""
    which = SpiderFixture(which)
    text = resources.files("arcbend.data").joinpath(f"{which.value.lower()}.paths").read_text()
    return parse_paths(text)
