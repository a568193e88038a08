"""Exact unpopularity factor, margin, and popularity of a matching.

The factor is found by a monotone search over the finite set of values it
can take (reduced fractions with bounded numerator and denominator),
querying a positive-perfect-matching predicate on the doubled auxiliary
graph.  An initial query at the largest candidate detects the infinite
case.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fastpath as fp
from .auxgraph import build_aux_graph, decompose_pm_weight, scale_to_integer
from .instance import MP, Instance, Matching, phi, require_valid
from .mwpm import WeightedGraph, max_weight_perfect_matching

#: candidate sets up to this size are materialized and bisected directly;
#: larger ones use Stern-Brocot descent
MATERIALIZE_LIMIT = 10**6


class InternalConsistencyError(RuntimeError):
    """An exact identity or monotonicity check failed; indicates a bug."""


@dataclass(frozen=True)
class CandidateSet:
    """Reduced fractions x/y with 0 <= x <= x_max and 1 <= y <= y_max."""

    x_max: int
    y_max: int

    @classmethod
    def for_instance(cls, instance: Instance) -> "CandidateSet":
        n = instance.n
        if instance.is_unweighted:
            return cls(max(n - 1, 0), max(n, 1))
        bound = max(instance.max_weight * n, 1)
        return cls(bound, bound)

    def contains(self, f: Fraction) -> bool:
        return 0 <= f.numerator <= self.x_max and 1 <= f.denominator <= self.y_max

    def materialize(self) -> list[Fraction]:
        values = {Fraction(0)}
        for y in range(1, self.y_max + 1):
            for x in range(1, self.x_max + 1):
                values.add(Fraction(x, y))
        return sorted(values)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The Stern-Brocot-simplest fraction strictly inside (lo, hi), lo >= 0.

    Every other fraction in the interval has numerator and denominator at
    least as large (it is a descendant in the tree).
    """
    if not 0 <= lo < hi:
        raise ValueError("need 0 <= lo < hi")
    floor_lo = lo.numerator // lo.denominator
    if floor_lo + 1 < hi:
        return Fraction(floor_lo + 1)
    if lo == floor_lo:
        # interval inside (floor_lo, floor_lo + 1]: simplest is floor_lo + 1/q
        q = (hi - lo) ** -1
        q_int = q.numerator // q.denominator + 1
        return lo + Fraction(1, q_int)
    inner = simplest_between((hi - floor_lo) ** -1, (lo - floor_lo) ** -1)
    return floor_lo + 1 / inner


def rational_binary_search(candidates: CandidateSet, pred) -> Fraction:
    """Least candidate f with pred(f) False.

    pred must be downward-monotone (true at k implies true at every smaller
    candidate) and false at the largest candidate x_max/1.
    """
    if candidates.x_max * max(candidates.y_max, 1) <= MATERIALIZE_LIMIT:
        values = candidates.materialize()
        observed = {}
        lo, hi = -1, len(values) - 1
        if pred(values[hi]):
            raise InternalConsistencyError("predicate true at the largest candidate")
        observed[hi] = False
        while hi - lo > 1:
            mid = (lo + hi) // 2
            result = bool(pred(values[mid]))
            observed[mid] = result
            if result:
                lo = mid
            else:
                hi = mid
        true_idx = [i for i, r in observed.items() if r]
        false_idx = [i for i, r in observed.items() if not r]
        if true_idx and min(false_idx) < max(true_idx):
            raise InternalConsistencyError("non-monotone predicate observations")
        return values[hi]

    # Stern-Brocot descent: shrink an open bracket (lo true, hi false) by
    # querying the simplest fraction inside until no candidate remains.
    lo = Fraction(0)
    if not pred(lo):
        return lo
    hi = Fraction(candidates.x_max)
    if pred(hi):
        raise InternalConsistencyError("predicate true at the largest candidate")
    while True:
        mid = simplest_between(lo, hi)
        if not candidates.contains(mid):
            return hi
        if pred(mid):
            lo = mid
        else:
            hi = mid


@dataclass(frozen=True)
class FactorReport:
    factor: Fraction | None  # None when infinite
    is_infinite: bool
    zero_by_convention: bool
    margin: int
    popular: bool
    witness: Matching | None  # rival attaining the factor (None when factor 0)
    margin_witness: Matching | None
    queries: int  # predicate evaluations performed by the factor search

    def to_json_dict(self, instance: Instance) -> dict:
        def pairs(m):
            if m is None:
                return None
            return sorted(
                [instance.names[a], instance.names[b]] for a, b in m.pairs
            )

        return {
            "factor_num": None if self.is_infinite else self.factor.numerator,
            "factor_den": None if self.is_infinite else self.factor.denominator,
            "is_infinite": self.is_infinite,
            "zero_by_convention": self.zero_by_convention,
            "margin": self.margin,
            "popular": self.popular,
            "witness_pairs": pairs(self.witness),
            "predicate_queries": self.queries,
        }

    def to_text(self, instance: Instance) -> str:
        factor = "inf" if self.is_infinite else str(self.factor)
        lines = [
            f"factor: {factor}",
            f"margin: {self.margin}",
            f"popular: {'yes' if self.popular else 'no'}",
        ]
        if self.zero_by_convention:
            lines.append("note: no rival beats this matching; factor 0 by convention")
        if self.witness is not None:
            pairs = " ".join(
                f"{instance.names[a]}-{instance.names[b]}"
                for a, b in sorted(self.witness.pairs)
            )
            lines.append(f"witness: {pairs if pairs else '(empty matching)'}")
        lines.append(f"queries: {self.queries}")
        return "\n".join(lines) + "\n"


def _solve_general(instance: Instance, m: Matching, k: Fraction):
    aux = build_aux_graph(instance, m, k)
    scaled, _ = scale_to_integer(aux)
    g = WeightedGraph(aux.num_vertices, tuple(scaled))
    result = max_weight_perfect_matching(g)
    if not result.found:
        raise InternalConsistencyError("auxiliary graph lost its perfect matching")
    if result.total_weight > 0:
        return True, set(result.pairs), aux
    return False, None, aux


def predicate_gt(instance: Instance, m: Matching, k, fastpath: str = "auto"):
    """Does some rival beat m by strictly more than factor k?

    Returns (answer, witness matching or None).  The witness satisfies
    phi(witness, m) > k * phi(m, witness), verified by recomputation.
    """
    require_valid(instance, m)
    k = Fraction(k)
    if k < 0:
        raise ValueError("k must be non-negative")
    use_fast = fastpath == "on" or (fastpath == "auto" and instance.kind == MP)
    if fastpath == "verify":
        fast = instance.kind == MP and fp.predicate_mp(instance, m, k)[0]
        general = _solve_general(instance, m, k)
        if instance.kind == MP and fast != general[0]:
            raise InternalConsistencyError(
                f"fast path and general path disagree at k = {k}"
            )
        positive, pm, aux = general
    elif use_fast:
        if instance.kind != MP:
            raise ValueError("fast path requires an MP instance")
        positive, pm, aux = fp.predicate_mp(instance, m, k)
    else:
        positive, pm, aux = _solve_general(instance, m, k)
    if not positive:
        return False, None
    decomp = decompose_pm_weight(aux, pm)
    if not decomp.identity_holds:
        raise InternalConsistencyError("perfect-matching weight identity failed")
    for rival in (decomp.m1, decomp.m2):
        if phi(instance, rival, m) > k * phi(instance, m, rival):
            return True, rival
    raise InternalConsistencyError("positive matching produced no valid witness")


def unpopularity_margin(instance: Instance, m: Matching):
    """Largest weighted vote difference any rival achieves over m (>= 0)."""
    require_valid(instance, m)
    aux = build_aux_graph(instance, m, Fraction(1))
    scaled, _ = scale_to_integer(aux)
    g = WeightedGraph(aux.num_vertices, tuple(scaled))
    result = max_weight_perfect_matching(g)
    if not result.found:
        raise InternalConsistencyError("auxiliary graph lost its perfect matching")
    if result.total_weight % 2 != 0:
        raise InternalConsistencyError("margin optimum is odd")
    margin = result.total_weight // 2
    decomp = decompose_pm_weight(aux, result.pairs)
    best = None
    for rival in (decomp.m1, decomp.m2):
        diff = phi(instance, rival, m) - phi(instance, m, rival)
        if best is None or diff > best[0]:
            best = (diff, rival)
    if best[0] != margin:
        raise InternalConsistencyError("margin witness does not attain the optimum")
    return margin, best[1]


def is_popular(instance: Instance, m: Matching, fastpath: str = "auto") -> bool:
    """Popular iff no rival wins a strict weighted majority (factor <= 1)."""
    return not predicate_gt(instance, m, 1, fastpath=fastpath)[0]


def unpopularity_factor(
    instance: Instance, m: Matching, fastpath: str = "auto"
) -> FactorReport:
    """Exact unpopularity factor, margin, and popularity of m, plus a rival
    matching witnessing the factor."""
    require_valid(instance, m)
    candidates = CandidateSet.for_instance(instance)
    cache: dict[Fraction, bool] = {}
    witnesses: dict[Fraction, Matching] = {}
    queries = 0

    def pred(k: Fraction) -> bool:
        nonlocal queries
        if k not in cache:
            queries += 1
            result, witness = predicate_gt(instance, m, k, fastpath=fastpath)
            cache[k] = result
            if witness is not None:
                witnesses[k] = witness
        return cache[k]

    margin, margin_witness = unpopularity_margin(instance, m)
    top = Fraction(candidates.x_max)
    if pred(top):
        # beyond the largest representable finite value: factor is infinite
        witness = witnesses[top]
        if phi(instance, m, witness) != 0:
            raise InternalConsistencyError("infinite-factor witness is beatable")
        return FactorReport(
            None, True, False, margin, False, witness, margin_witness, queries
        )
    factor = rational_binary_search(candidates, pred)
    if factor == 0:
        return FactorReport(
            Fraction(0), False, True, margin, True, None, margin_witness, queries
        )
    below = max((k for k, r in cache.items() if r), default=None)
    witness = witnesses.get(below) if below is not None else None
    if witness is not None:
        down = phi(instance, m, witness)
        if down == 0:
            raise InternalConsistencyError("finite factor but unbeatable witness")
        ratio = Fraction(phi(instance, witness, m), down)
        if ratio != factor:
            raise InternalConsistencyError("witness ratio does not equal the factor")
    popular = factor <= 1
    if popular != (margin == 0):
        raise InternalConsistencyError("factor and margin disagree on popularity")
    return FactorReport(
        factor, False, False, margin, popular, witness, margin_witness, queries
    )
