"""Brute-force ground truth for small instances: enumerate every matching
(including partial and empty ones) and evaluate the factor and margin
definitions directly."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

from .instance import Instance, Matching, phi, require_valid


def all_matchings(instance: Instance, cap: int = 10) -> list[Matching]:
    """Every set of pairwise-disjoint mutually-acceptable pairs, incl. the
    empty matching."""
    if instance.n > cap:
        raise ValueError(f"instance size {instance.n} exceeds oracle cap {cap}")
    pairs = instance.acceptable_pairs()

    def recurse(idx: int, used: set, chosen: list) -> Iterator[frozenset]:
        if idx == len(pairs):
            yield frozenset(chosen)
            return
        a, b = pairs[idx]
        yield from recurse(idx + 1, used, chosen)
        if a not in used and b not in used:
            yield from recurse(idx + 1, used | {a, b}, chosen + [(a, b)])

    return [Matching(p) for p in recurse(0, set(), [])]


def count_matchings(instance: Instance, cap: int = 10) -> int:
    """Independent recursive count (cross-check for the enumeration)."""
    if instance.n > cap:
        raise ValueError(f"instance size {instance.n} exceeds oracle cap {cap}")
    adjacency = {a: set() for a in range(instance.n)}
    for a, b in instance.acceptable_pairs():
        adjacency[a].add(b)
        adjacency[b].add(a)

    def count(people: tuple) -> int:
        if not people:
            return 1
        a, rest = people[0], people[1:]
        total = count(rest)  # a stays unmatched
        for b in adjacency[a]:
            if b in rest:
                total += count(tuple(x for x in rest if x != b))
        return total

    return count(tuple(range(instance.n)))


def oracle_factor(instance: Instance, m: Matching, cap: int = 10):
    """max over rivals of phi(rival, m) / phi(m, rival); math.inf when some
    rival wins unopposed; 0 by convention when no rival wins at all."""
    require_valid(instance, m)
    best = None
    for rival in all_matchings(instance, cap=cap):
        up = phi(instance, rival, m)
        down = phi(instance, m, rival)
        if up == 0 and down == 0:
            continue  # ties with m entirely; excluded by definition
        value = math.inf if down == 0 else Fraction(up, down)
        if best is None or value > best:
            best = value
    return Fraction(0) if best is None else best


def oracle_margin(instance: Instance, m: Matching, cap: int = 10) -> int:
    """max over all matchings of phi(rival, m) - phi(m, rival); >= 0."""
    require_valid(instance, m)
    return max(
        phi(instance, rival, m) - phi(instance, m, rival)
        for rival in all_matchings(instance, cap=cap)
    )
