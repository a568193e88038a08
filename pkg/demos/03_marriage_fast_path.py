"""Marriage instances admit a shortcut: orient the doubled graph around the
reference perfect matching S and look for a positive-weight directed cycle
instead of solving a matching problem.

The doubled graph of a marriage instance is bipartite (men + women-copies
vs. women + men-copies).  S-edges point one way, all other edges the other
way, so every directed cycle alternates and its symmetric difference with S
is again a perfect matching, heavier by exactly the cycle weight.
"""
from fractions import Fraction

from popfactor import build_aux_graph, parse_instance, parse_matching
from popfactor.auxgraph import vertex_name
from popfactor.fastpath import format_cycle, has_positive_cycle, orient

INSTANCE = """\
MP 4
GENDERS m m w w
m1: w1 w2
m2: w1 w2
w1: m2 m1
w2: m1 m2
"""

instance = parse_instance(INSTANCE)
matching = parse_matching("m1 w1\nm2 w2\n", instance)

for k in (Fraction(2), Fraction(3)):
    aux = build_aux_graph(instance, matching, k)
    oriented = orient(aux, instance)
    positive, cycle = has_positive_cycle(oriented)
    print(f"k = {k}: positive cycle found = {positive}")
    if positive:
        print("  " + format_cycle(oriented, cycle, namer=lambda v: vertex_name(instance, v)))

print()
print("A positive cycle at k = 2 but none at k = 3: the factor is in (2, 3].")
