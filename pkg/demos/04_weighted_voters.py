"""Voting weights: seniors count more.

The factor compares weighted vote totals; with all weights equal it reduces
to head counts.  Scaling everyone's weight by the same constant changes
nothing but the margin, while skewed weights can flip which matching wins.
"""
from popfactor import parse_instance, parse_matching, unpopularity_factor

BASE = """\
RP 4
a1: a2 a3 a4
a2: a3 a1
a3: a1 a2 a4
a4: a1 a3
"""

instance = parse_instance(BASE)
matching = parse_matching("a1 a2\na3 a4\n", instance)


def show(label, inst):
    report = unpopularity_factor(inst, matching)
    factor = "inf" if report.is_infinite else str(report.factor)
    print(f"{label:<28} factor = {factor:>5}  margin = {report.margin}  "
          f"popular = {report.popular}")


show("unit weights", instance)
show("all weights x 7", instance.with_weights([7, 7, 7, 7]))
show("a1 outvotes everyone (w=10)", instance.with_weights([10, 1, 1, 1]))
