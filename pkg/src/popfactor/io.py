"""Instance/matching file formats, random instance generation, and a
deferred-acceptance utility producing stable matchings for test inputs.

Instance format (line-oriented, `#` starts a comment):

    RP <n>               or  MP <n>
    WEIGHTS w1 ... wn    (optional; defaults to all 1)
    GENDERS m w m w ...  (MP only; one tag per person, in person order)
    <name>: <tokens>     (one line per person; a tie is a parenthesized
                          group, e.g.  a2: (a1 a4) a3)

Matching format: one pair per line, two names.
"""
from __future__ import annotations

import random
import re

from .instance import (
    MP,
    RP,
    Instance,
    InvalidMatchingError,
    Matching,
    PreferenceList,
    validate_matching,
)


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_instance(text: str) -> Instance:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "missing header line (RP <n> or MP <n>)")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in (RP, MP) or not parts[1].isdigit():
        raise ParseError(lineno, f"bad header {header!r}; expected 'RP <n>' or 'MP <n>'")
    kind, n = parts[0], int(parts[1])

    weights = None
    genders = None
    body = lines[1:]
    while body:
        lineno, line = body[0]
        tokens = line.split()
        if tokens[0] == "WEIGHTS":
            if len(tokens) != n + 1:
                raise ParseError(lineno, f"expected {n} weights")
            try:
                weights = tuple(int(t) for t in tokens[1:])
            except ValueError:
                raise ParseError(lineno, "weights must be integers") from None
            if any(w < 0 for w in weights):
                raise ParseError(lineno, "negative weight")
            body = body[1:]
        elif tokens[0] == "GENDERS":
            if len(tokens) != n + 1:
                raise ParseError(lineno, f"expected {n} gender tags")
            if any(t not in ("m", "w") for t in tokens[1:]):
                raise ParseError(lineno, "gender tags must be 'm' or 'w'")
            genders = tuple(tokens[1:])
            body = body[1:]
        else:
            break

    if len(body) != n:
        raise ParseError(
            body[0][0] if body else lineno,
            f"expected {n} preference lines, found {len(body)}",
        )
    names = []
    raw_prefs = []
    for lineno, line in body:
        if ":" not in line:
            raise ParseError(lineno, "preference line needs '<name>: <tokens>'")
        name, rest = line.split(":", 1)
        name = name.strip()
        if not name or " " in name:
            raise ParseError(lineno, f"bad person name {name!r}")
        if name in names:
            raise ParseError(lineno, f"duplicate person {name!r}")
        names.append(name)
        raw_prefs.append((lineno, rest))

    index = {name: i for i, name in enumerate(names)}
    prefs = []
    for a, (lineno, rest) in enumerate(raw_prefs):
        tokens = re.sub(r"([()])", r" \1 ", rest).split()
        tiers: list[frozenset[int]] = []
        group: list[int] | None = None
        seen: set[int] = set()
        for token in tokens:
            if token == "(":
                if group is not None:
                    raise ParseError(lineno, "nested '('")
                group = []
            elif token == ")":
                if group is None:
                    raise ParseError(lineno, "unmatched ')'")
                if not group:
                    raise ParseError(lineno, "empty tie group")
                tiers.append(frozenset(group))
                group = None
            else:
                if token not in index:
                    raise ParseError(lineno, f"unknown person {token!r}")
                b = index[token]
                if b in seen:
                    raise ParseError(lineno, f"duplicate entry {token!r}")
                if b == a:
                    raise ParseError(lineno, f"{names[a]} lists themself")
                seen.add(b)
                if group is not None:
                    group.append(b)
                else:
                    tiers.append(frozenset([b]))
        if group is not None:
            raise ParseError(lineno, "unclosed '('")
        prefs.append(PreferenceList(tuple(tiers)))

    try:
        return Instance(kind, tuple(names), tuple(prefs), genders, weights)
    except ValueError as exc:
        raise ParseError(lines[0][0], str(exc)) from None


def serialize_instance(instance: Instance) -> str:
    lines = [f"{instance.kind} {instance.n}"]
    if not instance.is_unweighted:
        lines.append("WEIGHTS " + " ".join(str(w) for w in instance.weights))
    if instance.kind == MP:
        lines.append("GENDERS " + " ".join(instance.genders))
    for a in range(instance.n):
        tokens = []
        for tier in instance.prefs[a].tiers:
            members = sorted(tier)
            if len(members) == 1:
                tokens.append(instance.names[members[0]])
            else:
                tokens.append("(" + " ".join(instance.names[b] for b in members) + ")")
        lines.append(f"{instance.names[a]}: " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_matching(text: str, instance: Instance) -> Matching:
    pairs = []
    for lineno, line in _content_lines(text):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, "expected two names per line")
        try:
            pairs.append((instance.index_of(tokens[0]), instance.index_of(tokens[1])))
        except KeyError as exc:
            raise ParseError(lineno, str(exc)) from None
    m = Matching.from_pairs(pairs)
    violations = validate_matching(instance, m)
    if violations:
        raise InvalidMatchingError(violations)
    return m


def serialize_matching(m: Matching, instance: Instance) -> str:
    lines = [
        f"{instance.names[a]} {instance.names[b]}" for a, b in sorted(m.pairs)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def gale_shapley(instance: Instance) -> Matching:
    """Deferred acceptance on a strict MP instance; proposer side is the
    gender of the first person in file order.  Output is stable: no two
    people prefer each other to their assigned partners."""
    if instance.kind != MP:
        raise ValueError("stable matching utility requires an MP instance")
    if any(len(t) > 1 for p in instance.prefs for t in p.tiers):
        raise ValueError("preference lists must be strict (no ties)")
    if instance.n == 0:
        return Matching(frozenset())
    proposer_gender = instance.genders[0]
    proposers = [a for a in range(instance.n) if instance.genders[a] == proposer_gender]
    # only mutually-acceptable partners can be proposed to
    targets = {
        a: [
            next(iter(t))
            for t in instance.prefs[a].tiers
            if instance.mutually_acceptable(a, next(iter(t)))
        ]
        for a in proposers
    }
    next_idx = {a: 0 for a in proposers}
    held: dict[int, int] = {}  # receiver -> proposer
    free = list(reversed(proposers))
    while free:
        a = free.pop()
        while next_idx[a] < len(targets[a]):
            b = targets[a][next_idx[a]]
            next_idx[a] += 1
            current = held.get(b)
            if current is None:
                held[b] = a
                break
            if instance.rank(b, a) < instance.rank(b, current):
                held[b] = a
                free.append(current)
                break
    return Matching(frozenset((min(a, b), max(a, b)) for b, a in held.items()))


def blocking_pairs(instance: Instance, m: Matching) -> list[tuple[int, int]]:
    """All mutually-acceptable pairs preferring each other to their partners."""
    out = []
    for a, b in instance.acceptable_pairs():
        if instance.rank(a, b) < instance.rank(a, m.partner(a)) and instance.rank(
            b, a
        ) < instance.rank(b, m.partner(b)):
            out.append((a, b))
    return out


def random_instance(
    kind: str,
    n: int,
    density: float = 0.8,
    tie_probability: float = 0.0,
    weight_range: tuple[int, int] = (1, 1),
    seed: int = 0,
) -> Instance:
    """Seeded random instance; acceptability is symmetrized so every listed
    partner lists back."""
    if kind not in (RP, MP):
        raise ValueError(f"unknown kind {kind!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 <= density <= 1 or not 0 <= tie_probability <= 1:
        raise ValueError("density and tie probability must be in [0, 1]")
    lo, hi = weight_range
    if lo < 0 or hi < lo:
        raise ValueError("bad weight range")
    rng = random.Random(seed)
    if kind == MP:
        men = (n + 1) // 2
        genders = tuple("m" if a < men else "w" for a in range(n))
        names = tuple(
            f"m{a + 1}" if a < men else f"w{a - men + 1}" for a in range(n)
        )
        candidates = [
            (a, b) for a in range(n) for b in range(a + 1, n) if genders[a] != genders[b]
        ]
    else:
        genders = None
        names = tuple(f"a{a + 1}" for a in range(n))
        candidates = [(a, b) for a in range(n) for b in range(a + 1, n)]
    accepted = {a: [] for a in range(n)}
    for a, b in candidates:
        if rng.random() < density:
            accepted[a].append(b)
            accepted[b].append(a)
    prefs = []
    for a in range(n):
        order = accepted[a][:]
        rng.shuffle(order)
        tiers: list[list[int]] = []
        for b in order:
            if tiers and rng.random() < tie_probability:
                tiers[-1].append(b)
            else:
                tiers.append([b])
        prefs.append(PreferenceList(tuple(frozenset(t) for t in tiers)))
    weights = tuple(rng.randint(lo, hi) for _ in range(n)) if (lo, hi) != (1, 1) else None
    return Instance(kind, names, tuple(prefs), genders, weights)


def random_matching(instance: Instance, seed: int = 0) -> Matching:
    """A random maximal-ish matching: greedily pair people in random order."""
    rng = random.Random(seed)
    pairs = instance.acceptable_pairs()
    rng.shuffle(pairs)
    used: set[int] = set()
    chosen = []
    for a, b in pairs:
        if a not in used and b not in used and rng.random() < 0.8:
            chosen.append((a, b))
            used |= {a, b}
    return Matching.from_pairs(chosen)
