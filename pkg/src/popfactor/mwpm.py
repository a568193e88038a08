"""Exact maximum-weight perfect matching on general graphs.

The solver wraps networkx's blossom-based max_weight_matching (Galil's
primal-dual algorithm, O(n^3)); with maxcardinality=True and integer
weights it returns an exact maximum-weight perfect matching whenever one
exists, negative weights included.  An exhaustive enumerator doubles as
the test oracle for small graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import networkx as nx

FOUND = "found"
NO_PERFECT_MATCHING = "no-perfect-matching"


@dataclass(frozen=True)
class WeightedGraph:
    num_vertices: int
    edges: tuple  # (u, v, integer weight) with u < v

    def __post_init__(self):
        norm = []
        seen = set()
        for u, v, w in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append((key[0], key[1], w))
        object.__setattr__(self, "edges", tuple(norm))

    def weight_lookup(self) -> dict:
        return {(u, v): w for u, v, w in self.edges}


@dataclass(frozen=True)
class PerfectMatchingResult:
    status: str
    pairs: tuple = ()
    total_weight: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _recompute_weight(g: WeightedGraph, pairs) -> int:
    lookup = g.weight_lookup()
    return sum(lookup[p] for p in pairs)


def max_weight_perfect_matching(g: WeightedGraph) -> PerfectMatchingResult:
    """Maximum-weight perfect matching, or no-perfect-matching status."""
    if g.num_vertices % 2 != 0:
        return PerfectMatchingResult(NO_PERFECT_MATCHING)
    if g.num_vertices == 0:
        return PerfectMatchingResult(FOUND, (), 0)
    graph = nx.Graph()
    graph.add_nodes_from(range(g.num_vertices))
    graph.add_weighted_edges_from(g.edges)
    mate = nx.max_weight_matching(graph, maxcardinality=True)
    if 2 * len(mate) != g.num_vertices:
        return PerfectMatchingResult(NO_PERFECT_MATCHING)
    pairs = tuple(sorted((min(u, v), max(u, v)) for u, v in mate))
    return PerfectMatchingResult(FOUND, pairs, _recompute_weight(g, pairs))


def enumerate_perfect_matchings(
    g: WeightedGraph, cap: int = 16
) -> Iterator[PerfectMatchingResult]:
    """Yield every perfect matching exactly once (test oracle, small graphs)."""
    if g.num_vertices > cap:
        raise ValueError(f"vertex count {g.num_vertices} exceeds cap {cap}")
    if g.num_vertices % 2 != 0:
        return
    adjacency: dict[int, set[int]] = {v: set() for v in range(g.num_vertices)}
    for u, v, _ in g.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    lookup = g.weight_lookup()

    def recurse(free: list[int], chosen: list[tuple[int, int]]):
        if not free:
            yield PerfectMatchingResult(
                FOUND, tuple(chosen), sum(lookup[p] for p in chosen)
            )
            return
        u = free[0]
        for v in sorted(adjacency[u]):
            if v in free and v != u:
                rest = [x for x in free if x not in (u, v)]
                yield from recurse(rest, chosen + [(min(u, v), max(u, v))])

    yield from recurse(list(range(g.num_vertices)), [])


def best_by_enumeration(g: WeightedGraph, cap: int = 16) -> PerfectMatchingResult:
    """Brute-force optimum, used to cross-check the solver."""
    best = None
    for pm in enumerate_perfect_matchings(g, cap=cap):
        if best is None or pm.total_weight > best.total_weight:
            best = pm
    return best if best is not None else PerfectMatchingResult(NO_PERFECT_MATCHING)


def parse_dimacs(text: str) -> WeightedGraph:
    """Edge-list ingestion: `e u v w` lines with 1-based vertices; `c` lines
    are comments and an optional `p edge V E` header fixes the vertex count."""
    edges = []
    num_vertices = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            num_vertices = int(parts[2])
        elif parts[0] == "e":
            u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
            edges.append((u - 1, v - 1, w))
            num_vertices = max(num_vertices, u, v)
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    return WeightedGraph(num_vertices, tuple(edges))
