"""Roommates/marriage instances: people, tiered preference lists, matchings.

People are identified by dense integer indices.  A preference list is a
sequence of tiers; everyone in the same tier is ranked equally.  Voting
weights default to 1, so the unweighted setting is the all-ones special
case.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

RP = "RP"
MP = "MP"

#: Rank of an unlisted or missing partner.
UNRANKED = math.inf


class InvalidMatchingError(ValueError):
    """Raised when an operation receives a matching that fails validation."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class PreferenceList:
    """Ordered tiers of acceptable partners, most preferred first."""

    tiers: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen = set()
        for tier in self.tiers:
            if not tier:
                raise ValueError("empty preference tier")
            if tier & seen:
                raise ValueError("person appears in two tiers")
            seen |= tier

    def rank(self, b: int) -> float:
        """1-based tier index of b, or UNRANKED if b is not listed."""
        for idx, tier in enumerate(self.tiers, start=1):
            if b in tier:
                return idx
        return UNRANKED

    def listed(self) -> frozenset[int]:
        out: set[int] = set()
        for tier in self.tiers:
            out |= tier
        return frozenset(out)


@dataclass(frozen=True)
class Instance:
    """An RP or MP instance with optional integer voting weights."""

    kind: str
    names: tuple[str, ...]
    prefs: tuple[PreferenceList, ...]
    genders: tuple[str, ...] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (RP, MP):
            raise ValueError(f"unknown instance kind {self.kind!r}")
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("duplicate person names")
        if len(self.prefs) != n:
            raise ValueError("one preference list per person required")
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * n)
        if len(self.weights) != n or any(w < 0 for w in self.weights):
            raise ValueError("weights must be n non-negative integers")
        if self.kind == MP:
            if self.genders is None or len(self.genders) != n:
                raise ValueError("MP instance needs a gender per person")
            if any(g not in ("m", "w") for g in self.genders):
                raise ValueError("genders must be 'm' or 'w'")
        for a, plist in enumerate(self.prefs):
            for b in plist.listed():
                if not 0 <= b < n:
                    raise ValueError(f"{self.names[a]} lists unknown person index {b}")
                if b == a:
                    raise ValueError(f"{self.names[a]} lists themself")
                if self.kind == MP and self.genders[a] == self.genders[b]:
                    raise ValueError(
                        f"{self.names[a]} lists same-gender {self.names[b]}"
                    )

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def total_list_length(self) -> int:
        return sum(len(p.listed()) for p in self.prefs)

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=0)

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1 for w in self.weights)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown person {name!r}") from None

    def rank(self, a: int, b: int | None) -> float:
        """Rank of b in a's list; UNRANKED when b is None or unlisted."""
        if b is None:
            return UNRANKED
        return self.prefs[a].rank(b)

    def mutually_acceptable(self, a: int, b: int) -> bool:
        """True iff a and b each list the other (the edge rule)."""
        if a == b:
            return False
        return self.prefs[a].rank(b) != UNRANKED and self.prefs[b].rank(a) != UNRANKED

    def acceptable_pairs(self) -> list[tuple[int, int]]:
        return [
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if self.mutually_acceptable(a, b)
        ]

    def with_weights(self, weights) -> "Instance":
        return Instance(self.kind, self.names, self.prefs, self.genders, tuple(weights))


@dataclass(frozen=True)
class Matching:
    """A set of unordered pairs.  Validation is separate (validate_matching)."""

    pairs: frozenset[tuple[int, int]]
    _partner: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        norm = frozenset(tuple(sorted(p)) for p in self.pairs)
        object.__setattr__(self, "pairs", norm)
        partner: dict[int, int] = {}
        for a, b in sorted(norm):
            partner[a] = b
            partner[b] = a
        object.__setattr__(self, "_partner", partner)

    @classmethod
    def from_pairs(cls, pairs) -> "Matching":
        return cls(frozenset(tuple(p) for p in pairs))

    def partner(self, a: int) -> int | None:
        return self._partner.get(a)

    def is_matched(self, a: int) -> bool:
        return a in self._partner

    def __len__(self) -> int:
        return len(self.pairs)


EMPTY_MATCHING = Matching(frozenset())


def rank_of(instance: Instance, a: int, b: int | None) -> float:
    """Extended rank: tier index of b in a's list, UNRANKED for null/unlisted."""
    return instance.rank(a, b)


def phi(instance: Instance, x: Matching, y: Matching) -> int:
    """Total weight of people strictly preferring their partner in x over y."""
    for m in (x, y):
        violations = validate_matching(instance, m)
        if violations:
            raise InvalidMatchingError(violations)
    total = 0
    for a in range(instance.n):
        if instance.rank(a, x.partner(a)) < instance.rank(a, y.partner(a)):
            total += instance.weights[a]
    return total


def delta(instance: Instance, x: Matching, y: Matching):
    """phi(y,x)/phi(x,y) as an exact Fraction, or math.inf when phi(x,y) = 0."""
    down = phi(instance, x, y)
    if down == 0:
        return math.inf
    return Fraction(phi(instance, y, x), down)


def validate_matching(instance: Instance, m: Matching) -> list[str]:
    """Return a list of violations; empty means the matching is valid."""
    violations = []
    seen: set[int] = set()
    for a, b in sorted(m.pairs):
        for v in (a, b):
            if not 0 <= v < instance.n:
                violations.append(f"person index {v} out of range")
        if not all(0 <= v < instance.n for v in (a, b)):
            continue
        if a == b:
            violations.append(f"self-pair ({instance.names[a]})")
            continue
        if a in seen or b in seen:
            violations.append(
                f"pair ({instance.names[a]}, {instance.names[b]}) overlaps another pair"
            )
        seen |= {a, b}
        if not instance.mutually_acceptable(a, b):
            violations.append(
                f"pair ({instance.names[a]}, {instance.names[b]}) not mutually acceptable"
            )
        elif instance.kind == MP and instance.genders[a] == instance.genders[b]:
            violations.append(
                f"pair ({instance.names[a]}, {instance.names[b]}) same gender"
            )
    return violations


def require_valid(instance: Instance, m: Matching) -> None:
    violations = validate_matching(instance, m)
    if violations:
        raise InvalidMatchingError(violations)
