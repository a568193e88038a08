"""Marriage-instance fast path: a positive-weight perfect matching of the
doubled graph exists iff the graph, oriented around the reference matching
S, has a positive-weight directed cycle.

Orientation convention (pinned to keep witnesses reproducible): S-edges
point from part H1 to part H2, all other edges from H2 to H1.  Every
directed cycle then alternates S / non-S edges and has even length.
Detection runs Bellman-Ford for a negative cycle on the negated arcs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .auxgraph import AuxGraph, build_aux_graph, copy_vertex, scale_to_integer
from .instance import MP, Instance, Matching


@dataclass(frozen=True)
class OrientedAuxGraph:
    num_vertices: int
    arcs: tuple  # (tail, head, integer weight)
    h1: frozenset
    h2: frozenset
    s_arcs: frozenset  # arcs that came from S-edges


def bipartition(aux: AuxGraph, instance: Instance) -> tuple[frozenset, frozenset]:
    """Split vertices into (men + women-copies, women + men-copies)."""
    if instance.kind != MP:
        raise ValueError("bipartition requires an MP instance")
    n = instance.n
    h1, h2 = set(), set()
    for a in range(n):
        if instance.genders[a] == "m":
            h1.add(a)
            h2.add(copy_vertex(n, a))
        else:
            h2.add(a)
            h1.add(copy_vertex(n, a))
    for u, v in aux.edges:
        if (u in h1) == (v in h1):
            raise ValueError(f"edge ({u}, {v}) joins vertices in the same part")
    return frozenset(h1), frozenset(h2)


def orient(aux: AuxGraph, instance: Instance) -> OrientedAuxGraph:
    """Direct S-edges H1->H2 and all other edges H2->H1, scaling weights
    to integers."""
    h1, h2 = bipartition(aux, instance)
    scaled, _ = scale_to_integer(aux)
    arcs = []
    s_arcs = set()
    for u, v, w in scaled:
        if (u, v) in aux.s_edges:
            tail, head = (u, v) if u in h1 else (v, u)
            s_arcs.add((tail, head))
        else:
            tail, head = (u, v) if u in h2 else (v, u)
        arcs.append((tail, head, w))
    return OrientedAuxGraph(aux.num_vertices, tuple(arcs), h1, h2, frozenset(s_arcs))


def has_positive_cycle(og: OrientedAuxGraph):
    """Detect a directed cycle of total weight > 0.

    Returns (True, witness vertex sequence v1..vL closing back to v1) or
    (False, None).  The witness weight is recomputed from the arc list.
    """
    # negative-cycle detection on negated weights, virtual source = all-zero
    # initial distances
    n = og.num_vertices
    dist = [0] * n
    pred = [-1] * n
    neg = [(u, v, -w) for u, v, w in og.arcs]
    cycle_entry = -1
    for round_ in range(n):
        changed = False
        for u, v, w in neg:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = u
                changed = True
                if round_ == n - 1:
                    cycle_entry = v
        if not changed:
            return False, None
    if cycle_entry == -1:
        return False, None
    # walk predecessors n steps to guarantee landing inside the cycle
    v = cycle_entry
    for _ in range(n):
        v = pred[v]
    cycle = [v]
    u = pred[v]
    while u != v:
        cycle.append(u)
        u = pred[u]
    cycle.reverse()
    weight = _cycle_weight(og, cycle)
    assert weight > 0
    return True, cycle


def _cycle_weight(og: OrientedAuxGraph, cycle) -> int:
    lookup = {(u, v): w for u, v, w in og.arcs}
    total = 0
    for i, u in enumerate(cycle):
        total += lookup[(u, cycle[(i + 1) % len(cycle)])]
    return total


def format_cycle(og: OrientedAuxGraph, cycle, namer=str) -> str:
    names = [namer(v) for v in cycle] + [namer(cycle[0])]
    return " -> ".join(names) + f" (weight = {_cycle_weight(og, cycle)})"


def cycle_to_perfect_matching(aux: AuxGraph, cycle) -> set:
    """Symmetric difference of S with the witness cycle's (undirected) edges;
    yields a perfect matching heavier than S by the cycle weight."""
    cycle_edges = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        cycle_edges.add((min(u, v), max(u, v)))
    return set(aux.s_edges) ^ cycle_edges


def predicate_mp(instance: Instance, m: Matching, k: Fraction):
    """MP-only check that some rival beats m by more than factor k.

    Returns (answer, witness perfect matching of the doubled graph or None).
    Matches the general max-weight-perfect-matching route exactly.
    """
    aux = build_aux_graph(instance, m, Fraction(k))
    og = orient(aux, instance)
    positive, cycle = has_positive_cycle(og)
    if not positive:
        return False, None, aux
    return True, cycle_to_perfect_matching(aux, cycle), aux
