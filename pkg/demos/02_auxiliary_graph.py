"""The doubled auxiliary graph behind the factor test.

For a matching m and a threshold k, we build a graph on the people plus a
copy of each person.  Edge weights add +w for every person a rival would
make happier and -k*w for every person it would make sadder; the matched
self-links cost -2k*w.  A rival beating m by more than factor k exists
exactly when this graph has a positive-weight perfect matching.
"""
from fractions import Fraction

from popfactor import build_aux_graph, parse_instance, parse_matching
from popfactor.auxgraph import decompose_pm_weight, dump_edges, scale_to_integer
from popfactor.mwpm import WeightedGraph, max_weight_perfect_matching

INSTANCE = """\
RP 4
a1: a2 a3 a4
a2: a3 a1
a3: a1 a2 a4
a4: a1 a3
"""

instance = parse_instance(INSTANCE)
matching = parse_matching("a1 a2\na3 a4\n", instance)

for k in (Fraction(2), Fraction(3)):
    graph = build_aux_graph(instance, matching, k)
    print(f"--- auxiliary graph at k = {k} ---")
    print(dump_edges(graph), end="")
    scaled, _ = scale_to_integer(graph)
    result = max_weight_perfect_matching(WeightedGraph(graph.num_vertices, tuple(scaled)))
    print(f"max-weight perfect matching weight: {result.total_weight}")
    if result.total_weight > 0:
        decomp = decompose_pm_weight(graph, result.pairs)
        print(f"  weight identity: {decomp.total_weight} = "
              f"{decomp.term1} + {decomp.term2} (halves of the doubled graph)")
        rival = decomp.m1
        names = instance.names
        print("  rival extracted:", {f"{names[a]}-{names[b]}" for a, b in rival.pairs})
    print()

print("Positive at k = 2 but not at k = 3, so the factor lies in (2, 3].")
