"""How unpopular is a matching?  Two measures on a tiny roommates instance.

Four people, everyone acceptable to everyone, some ties.  We compare three
matchings: one is popular (no rival wins a majority vote against it), one
loses a vote 1-0 (infinite factor, small margin), one loses 3-1 (factor 3,
margin 2).  The two measures order them differently.
"""
from popfactor import parse_instance, parse_matching, unpopularity_factor

INSTANCE = """\
RP 4
a1: a4 a2 a3
a2: (a1 a4) a3
a3: (a1 a4) a2
a4: (a2 a3) a1
"""

instance = parse_instance(INSTANCE)

for label, pairs in [
    ("m0 = {a1a2, a3a4}", "a1 a2\na3 a4\n"),
    ("m1 = {a1a3, a2a4}", "a1 a3\na2 a4\n"),
    ("m2 = {a1a4, a2a3}", "a1 a4\na2 a3\n"),
]:
    matching = parse_matching(pairs, instance)
    report = unpopularity_factor(instance, matching)
    factor = "inf" if report.is_infinite else str(report.factor)
    print(f"{label}:  factor = {factor:>4}  margin = {report.margin}  "
          f"popular = {report.popular}  (predicate queries: {report.queries})")

print()
print("Note m1 has the larger factor but the smaller margin: the rival that")
print("beats it wins 1-0 (an unopposed win makes the ratio infinite), while")
print("m2's worst rival wins 3-1.")
