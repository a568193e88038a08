"""Built-in golden inputs and the self-test suite behind `popfactor selftest`.

Four small instances with known factor/margin values, exercised end to end
through both the search engine and the brute-force oracle.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .auxgraph import build_aux_graph, dump_edges
from .engine import is_popular, predicate_gt, unpopularity_factor, unpopularity_margin
from .fastpath import predicate_mp
from .io import parse_instance, parse_matching
from .oracle import oracle_factor, oracle_margin

FOUR_CYCLE_RP = """\
RP 4
a1: a4 a2 a3
a2: (a1 a4) a3
a3: (a1 a4) a2
a4: (a2 a3) a1
"""

FOUR_CYCLE_RP_M0 = "a1 a2\na3 a4\n"
FOUR_CYCLE_RP_M1 = "a1 a3\na2 a4\n"
FOUR_CYCLE_RP_M2 = "a1 a4\na2 a3\n"

CHAIN_RP = """\
RP 4
a1: a2 a3 a4
a2: a3 a1
a3: a1 a2 a4
a4: a1 a3
"""

CHAIN_RP_M = "a1 a2\na3 a4\n"

# expected auxiliary-graph edge lists for CHAIN_RP_M at k = 2 and k = 3
CHAIN_RP_DUMP_K2 = """\
a1 a2 0
a1 a3 -1
a1 a4 -1
a1 a1' -4
a2 a3 2
a2 a2' -4
a3 a4 0
a3 a3' -4
a4 a4' -4
a1' a2' 0
a1' a3' -1
a1' a4' -1
a2' a3' 2
a3' a4' 0
"""

CHAIN_RP_DUMP_K3 = """\
a1 a2 0
a1 a3 -2
a1 a4 -2
a1 a1' -6
a2 a3 2
a2 a2' -6
a3 a4 0
a3 a3' -6
a4 a4' -6
a1' a2' 0
a1' a3' -2
a1' a4' -2
a2' a3' 2
a3' a4' 0
"""

TWO_COUPLE_MP = """\
MP 4
GENDERS m m w w
m1: w1 w2
m2: w1 w2
w1: m2 m1
w2: m1 m2
"""

TWO_COUPLE_MP_M = "m1 w1\nm2 w2\n"


def _check(results, name, condition):
    results.append((name, bool(condition)))


def run_selftest() -> list[tuple[str, bool]]:
    """Golden checks over the four built-in instances; returns (name, ok)."""
    results: list[tuple[str, bool]] = []

    # four-cycle RP instance: one popular matching, one with infinite factor
    inst = parse_instance(FOUR_CYCLE_RP)
    m0 = parse_matching(FOUR_CYCLE_RP_M0, inst)
    m1 = parse_matching(FOUR_CYCLE_RP_M1, inst)
    m2 = parse_matching(FOUR_CYCLE_RP_M2, inst)
    _check(results, "four-cycle: m0 popular", is_popular(inst, m0))
    r1 = unpopularity_factor(inst, m1)
    _check(results, "four-cycle: m1 factor infinite", r1.is_infinite)
    _check(results, "four-cycle: m1 margin 1", r1.margin == 1)
    r2 = unpopularity_factor(inst, m2)
    _check(results, "four-cycle: m2 factor 3", r2.factor == Fraction(3))
    _check(results, "four-cycle: m2 margin 2", r2.margin == 2)
    _check(results, "four-cycle: oracle agrees on m1", oracle_factor(inst, m1) == math.inf)
    _check(results, "four-cycle: oracle agrees on m2", oracle_factor(inst, m2) == Fraction(3))

    # chain RP instance: factor bracketed between 2 and 3, equals 3
    inst = parse_instance(CHAIN_RP)
    m = parse_matching(CHAIN_RP_M, inst)
    _check(results, "chain: beats factor 2", predicate_gt(inst, m, 2)[0])
    _check(results, "chain: does not beat factor 3", not predicate_gt(inst, m, 3)[0])
    _check(
        results,
        "chain: factor 3",
        unpopularity_factor(inst, m).factor == Fraction(3),
    )
    _check(results, "chain: oracle agrees", oracle_factor(inst, m) == Fraction(3))
    _check(
        results,
        "chain: aux graph at k=2 matches golden dump",
        dump_edges(build_aux_graph(inst, m, Fraction(2))) == CHAIN_RP_DUMP_K2,
    )
    _check(
        results,
        "chain: aux graph at k=3 matches golden dump",
        dump_edges(build_aux_graph(inst, m, Fraction(3))) == CHAIN_RP_DUMP_K3,
    )

    # two-couple MP instance: fast path finds a positive cycle at k = 2
    inst = parse_instance(TWO_COUPLE_MP)
    m = parse_matching(TWO_COUPLE_MP_M, inst)
    _check(results, "two-couple: fast path beats factor 2", predicate_mp(inst, m, Fraction(2))[0])
    _check(
        results,
        "two-couple: general path agrees",
        predicate_gt(inst, m, 2, fastpath="off")[0],
    )
    report = unpopularity_factor(inst, m, fastpath="verify")
    _check(
        results,
        "two-couple: factor matches oracle",
        not report.is_infinite and report.factor == oracle_factor(inst, m),
    )
    _check(
        results,
        "two-couple: margin matches oracle",
        unpopularity_margin(inst, m)[0] == oracle_margin(inst, m),
    )
    return results
