"""Doubled auxiliary graph whose positive-weight perfect matchings certify
that a rival matching beats the given one by more than a factor k.

Vertices 0..n-1 are the original people, n..2n-1 their copies.  Edge
weights are exact Fractions; they are scaled to integers only at solver
entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .instance import Instance, Matching, require_valid


def copy_vertex(n: int, a: int) -> int:
    return n + a


def vertex_name(instance: Instance, v: int) -> str:
    n = instance.n
    return instance.names[v] if v < n else instance.names[v - n] + "'"


@dataclass(frozen=True)
class AuxGraph:
    instance: Instance
    matching: Matching
    k: Fraction
    edges: dict  # sorted vertex pair -> Fraction weight
    s_edges: frozenset  # reference perfect matching, all zero weight under k-terms

    @property
    def num_vertices(self) -> int:
        return 2 * self.instance.n

    def weight_of(self, pairs) -> Fraction:
        return sum((self.edges[tuple(sorted(p))] for p in pairs), Fraction(0))


def delta_term(instance: Instance, m: Matching, i: int, j: int, k: Fraction) -> Fraction:
    """Contribution of person i toward the edge {i, j}:

    +w(i) when i is unmatched or prefers j to their partner, -k*w(i) when
    i prefers their partner, 0 on indifference or when {i, j} is matched.
    """
    if not instance.mutually_acceptable(i, j):
        raise ValueError(
            f"pair ({instance.names[i]}, {instance.names[j]}) not mutually acceptable"
        )
    r_new = instance.rank(i, j)
    r_cur = instance.rank(i, m.partner(i))
    if r_new < r_cur:
        return Fraction(instance.weights[i])
    if r_new > r_cur:
        return -k * instance.weights[i]
    return Fraction(0)


def build_aux_graph(instance: Instance, m: Matching, k: Fraction) -> AuxGraph:
    """Build the doubled graph for matching m at threshold k, plus the
    reference perfect matching S induced by m."""
    require_valid(instance, m)
    k = Fraction(k)
    n = instance.n
    edges: dict[tuple[int, int], Fraction] = {}
    for i, j in instance.acceptable_pairs():
        w = delta_term(instance, m, i, j, k) + delta_term(instance, m, j, i, k)
        edges[(i, j)] = w
        edges[(copy_vertex(n, i), copy_vertex(n, j))] = w
    s_pairs = set()
    for a in range(n):
        if m.is_matched(a):
            edges[(a, copy_vertex(n, a))] = -2 * k * instance.weights[a]
        else:
            edges[(a, copy_vertex(n, a))] = Fraction(0)
            s_pairs.add((a, copy_vertex(n, a)))
    for a, b in m.pairs:
        s_pairs.add((a, b))
        s_pairs.add((copy_vertex(n, a), copy_vertex(n, b)))
    return AuxGraph(instance, m, k, edges, frozenset(s_pairs))


def scale_to_integer(g: AuxGraph):
    """Multiply all weights by the least common denominator.

    Returns (edge list with integer weights, scale factor).  Positivity of
    any matching or cycle weight is preserved.
    """
    scale = lcm(*(w.denominator for w in g.edges.values())) if g.edges else 1
    # every denominator divides k's denominator by construction
    assert g.k.denominator % scale == 0
    scaled = []
    for (u, v), w in sorted(g.edges.items()):
        sw = w * scale
        assert sw.denominator == 1
        scaled.append((u, v, sw.numerator))
    return scaled, scale


def dump_edges(g: AuxGraph) -> str:
    """Plain-text edge list (one `u v weight` line, copies marked with ')."""
    lines = []
    for (u, v), w in sorted(g.edges.items()):
        lines.append(
            f"{vertex_name(g.instance, u)} {vertex_name(g.instance, v)} {w}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Decomposition:
    """Split of a perfect matching of the doubled graph into its two halves,
    with the exact weight identity they satisfy."""

    m1: Matching  # pairs among original vertices
    m2: Matching  # pairs among copy vertices, mapped back
    total_weight: Fraction
    term1: Fraction  # phi(m1, m) - k * phi(m, m1)
    term2: Fraction  # phi(m2, m) - k * phi(m, m2)

    @property
    def identity_holds(self) -> bool:
        return self.total_weight == self.term1 + self.term2


def decompose_pm_weight(g: AuxGraph, pm) -> Decomposition:
    """Decompose a perfect matching of g into original-side and copy-side
    matchings and verify weight(pm) = sum of their phi-difference terms."""
    from .instance import phi  # local import avoids cycle in module docs

    n = g.instance.n
    pairs = {tuple(sorted(p)) for p in pm}
    covered = [v for p in pairs for v in p]
    if sorted(covered) != list(range(2 * n)):
        raise ValueError("not a perfect matching of the auxiliary graph")
    m1_pairs = {(a, b) for a, b in pairs if a < n and b < n}
    m2_pairs = {(a - n, b - n) for a, b in pairs if a >= n and b >= n}
    m1 = Matching(frozenset(m1_pairs))
    m2 = Matching(frozenset(m2_pairs))
    unmatched1 = {a for a in range(n) if not m1.is_matched(a)}
    unmatched2 = {a for a in range(n) if not m2.is_matched(a)}
    if unmatched1 != unmatched2:
        raise ValueError("halves of the perfect matching leave different people unmatched")
    total = g.weight_of(pairs)
    term1 = Fraction(phi(g.instance, m1, g.matching)) - g.k * phi(g.instance, g.matching, m1)
    term2 = Fraction(phi(g.instance, m2, g.matching)) - g.k * phi(g.instance, g.matching, m2)
    return Decomposition(m1, m2, total, term1, term2)
