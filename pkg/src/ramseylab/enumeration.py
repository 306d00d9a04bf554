"""Isomorph-free enumeration of small graphs and trees.

Graphs are generated by augmentation (a new vertex with every possible
neighborhood, or a new edge) and deduplicated behind cheap invariant buckets
with exact isomorphism tests inside each bucket.  Counts are pinned against
published sequences in the tests.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .graphs import Graph
from .subgraph import contains_copy


def _triangle_counts(g: Graph) -> tuple[int, ...]:
    per_vertex = []
    for v in range(g.n):
        nbrs = g.adj[v]
        count = 0
        for w in g.neighbors(v):
            count += (nbrs & g.adj[w]).bit_count()
        per_vertex.append(count // 2)
    return tuple(sorted(per_vertex))


def invariant_key(g: Graph):
    """A cheap isomorphism-invariant bucket key."""
    profile = tuple(
        sorted(
            (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))
            for v in range(g.n)
        )
    )
    return (g.n, g.m, g.degree_sequence(), _triangle_counts(g), profile)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test for same-size graphs."""
    if a.n != b.n or a.m != b.m:
        return False
    if invariant_key(a) != invariant_key(b):
        return False
    # Equal vertex and edge counts turn any embedding into an isomorphism.
    return contains_copy(b, a) is not None


class IsoClassStore:
    """A set of graphs up to isomorphism."""

    def __init__(self):
        self._buckets: dict[tuple, list[Graph]] = {}
        self.count = 0

    def add(self, g: Graph) -> bool:
        """Insert g; returns True when its class was not present yet."""
        key = invariant_key(g)
        bucket = self._buckets.setdefault(key, [])
        for rep in bucket:
            if contains_copy(rep, g) is not None:
                return False
        bucket.append(g)
        self.count += 1
        return True

    def __iter__(self) -> Iterator[Graph]:
        for bucket in self._buckets.values():
            yield from bucket


def graphs_on_vertices(n: int) -> list[Graph]:
    """All graphs on exactly n vertices up to isomorphism (isolates included)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    level = [Graph(1)]
    for size in range(2, n + 1):
        store = IsoClassStore()
        nxt = []
        for g in level:
            for bits_ in range(1 << (size - 1)):
                extra = [(w, size - 1) for w in range(size - 1) if bits_ >> w & 1]
                candidate = Graph(size, list(g.edges) + extra)
                if store.add(candidate):
                    nxt.append(candidate)
        level = nxt
    return sorted(level, key=lambda g: (g.m, g.edges))


def graphs_up_to_vertices(n: int) -> list[Graph]:
    out: list[Graph] = []
    for size in range(1, n + 1):
        out.extend(graphs_on_vertices(size))
    return out


def graphs_by_edge_count(max_edges: int) -> dict[int, list[Graph]]:
    """Graphs with 1..max_edges edges and no isolated vertices, up to iso."""
    if max_edges < 1:
        raise ValueError("max_edges must be at least 1")
    k2 = Graph(2, [(0, 1)])
    levels: dict[int, list[Graph]] = {1: [k2]}
    for m in range(2, max_edges + 1):
        store = IsoClassStore()
        nxt = []

        def offer(candidate: Graph):
            if store.add(candidate):
                nxt.append(candidate)

        for g in levels[m - 1]:
            # New edge between existing non-adjacent vertices.
            for u, v in itertools.combinations(range(g.n), 2):
                if not g.has_edge(u, v):
                    offer(g.with_edges([(u, v)]))
            # New pendant vertex.
            for u in range(g.n):
                offer(Graph(g.n + 1, list(g.edges) + [(u, g.n)]))
            # New isolated edge.
            offer(g.disjoint_union(k2))
        levels[m] = sorted(nxt, key=lambda g: (g.n, g.edges))
    return levels


def trees_on_vertices(n: int) -> list[Graph]:
    """All trees on exactly n vertices up to isomorphism, by leaf augmentation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    level = [Graph(1)]
    for size in range(2, n + 1):
        store = IsoClassStore()
        nxt = []
        for t in level:
            for v in range(t.n):
                candidate = Graph(size, list(t.edges) + [(v, size - 1)])
                if store.add(candidate):
                    nxt.append(candidate)
        level = nxt
    return sorted(level, key=lambda g: g.edges)


def trees_up_to_vertices(n: int) -> list[Graph]:
    out: list[Graph] = []
    for size in range(1, n + 1):
        out.extend(trees_on_vertices(size))
    return out


def regular_graphs(n: int, r: int) -> list[Graph]:
    """All r-regular graphs on n vertices up to isomorphism.

    Augments vertex by vertex under a degree cap, pruning partial graphs whose
    remaining degree demand cannot be met by the vertices still to come, then
    keeps the exactly-regular results.  Practical for n*r/2 up to ~14 edges.
    """
    if r < 0 or n < 1:
        raise ValueError("need n >= 1 and r >= 0")
    if r >= n or (n * r) % 2 == 1:
        return []
    if r == 0:
        return [Graph(n)]

    def feasible(g: Graph, size: int) -> bool:
        remaining = n - size
        for v in range(size):
            need = r - g.degree(v)
            if need < 0 or need > remaining:
                return False
        # Handshake on the missing degree: each future vertex supplies <= r.
        deficit = sum(r - g.degree(v) for v in range(size))
        return deficit <= remaining * r

    level: list[Graph] = [Graph(1)]
    for size in range(2, n + 1):
        store = IsoClassStore()
        nxt = []
        for g in level:
            open_slots = [v for v in range(size - 1) if g.degree(v) < r]
            for count in range(min(r, len(open_slots)) + 1):
                for combo in itertools.combinations(open_slots, count):
                    candidate = Graph(size, list(g.edges) + [(v, size - 1) for v in combo])
                    if feasible(candidate, size) and store.add(candidate):
                        nxt.append(candidate)
        level = nxt
    return sorted(
        (g for g in level if all(g.degree(v) == r for v in range(n))),
        key=lambda g: g.edges,
    )


def all_graphs(vertex_counts: Iterable[int]) -> Iterator[Graph]:
    for n in vertex_counts:
        yield from graphs_on_vertices(n)
