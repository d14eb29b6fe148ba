"""Simple undirected graphs with stable vertex identifiers."""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass, field

Vertex = Hashable


class GraphError(ValueError):
    pass


def _edge(u: Vertex, v: Vertex) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``vertices`` keeps insertion order so that output (file formats, reports)
    is deterministic. Equality compares vertex sets and edge sets, i.e. two
    graphs are equal when they are *identically labeled*, not merely
    isomorphic.
    """

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex identifiers")
        adj: dict = {v: set() for v in verts}
        edges = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise GraphError(f"self-loop or malformed edge {set(e)!r}")
            u, v = pair
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            adj[u].add(v)
            adj[v].add(u)
            edges.add(_edge(u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[tuple]) -> Graph:
        return cls(tuple(vertices), frozenset(_edge(u, v) for u, v in edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbors(self, v: Vertex) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return v in self.neighbors(u)

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def edge_list(self) -> list[tuple]:
        """Edges as ordered pairs, sorted by vertex position."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for e in self.edges:
            u, v = sorted(e, key=pos.__getitem__)
            out.append((u, v))
        out.sort(key=lambda uv: (pos[uv[0]], pos[uv[1]]))
        return out

    def induced(self, keep: Iterable[Vertex]) -> Graph:
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return Graph(verts, frozenset(e for e in self.edges if e <= keep))

    def components(self, within: Iterable[Vertex] | None = None) -> list[set]:
        """Connected components of the subgraph induced by ``within``."""
        allowed = set(self.vertices if within is None else within)
        seen: set = set()
        comps = []
        for start in self.vertices:
            if start not in allowed or start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w in allowed and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
        return comps

    def is_clique(self, vs: Iterable[Vertex]) -> bool:
        vs = list(vs)
        return all(self.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])
