import random
from fractions import Fraction

import pytest

from popfactor import build_aux_graph, random_instance
from popfactor.auxgraph import decompose_pm_weight, scale_to_integer
from popfactor.engine import predicate_gt
from popfactor.fastpath import (
    bipartition,
    cycle_to_perfect_matching,
    format_cycle,
    has_positive_cycle,
    orient,
    predicate_mp,
)
from popfactor.instance import Instance, Matching, PreferenceList
from popfactor.io import random_matching
from popfactor.oracle import oracle_factor


def test_bipartition_two_couple(two_couple):
    inst, m = two_couple
    g = build_aux_graph(inst, m, Fraction(2))
    h1, h2 = bipartition(g, inst)
    # men and women-copies on one side, women and men-copies on the other
    assert h1 == frozenset({0, 1, 6, 7})
    assert h2 == frozenset({2, 3, 4, 5})


def test_bipartition_single_couple():
    inst = Instance(
        "MP",
        ("m1", "w1"),
        (PreferenceList((frozenset({1}),)), PreferenceList((frozenset({0}),))),
        ("m", "w"),
    )
    g = build_aux_graph(inst, Matching.from_pairs([(0, 1)]), Fraction(1))
    h1, h2 = bipartition(g, inst)
    assert len(h1) == len(h2) == 2


def test_bipartition_rejects_rp_triangle():
    inst = random_instance("RP", 3, density=1.0, seed=0)
    g = build_aux_graph(inst, Matching(frozenset()), Fraction(1))
    with pytest.raises(ValueError):
        bipartition(g, inst)


def test_positive_cycle_two_couple(two_couple):
    inst, m = two_couple
    og = orient(build_aux_graph(inst, m, Fraction(2)), inst)
    positive, cycle = has_positive_cycle(og)
    assert positive
    # witness alternates S / non-S arcs and has even length
    assert len(cycle) % 2 == 0
    arcs = set(og.s_arcs)
    flags = [
        (cycle[i], cycle[(i + 1) % len(cycle)]) in arcs for i in range(len(cycle))
    ]
    assert all(flags[i] != flags[i - 1] for i in range(len(flags)))
    assert "weight = " in format_cycle(og, cycle)


def test_no_positive_cycle_at_k3(two_couple):
    inst, m = two_couple
    og = orient(build_aux_graph(inst, m, Fraction(3)), inst)
    assert has_positive_cycle(og) == (False, None)


def test_all_zero_weights_no_cycle(two_couple):
    inst, m = two_couple
    og = orient(build_aux_graph(inst, m, Fraction(2)), inst)
    zeroed = og.__class__(og.num_vertices, tuple((u, v, 0) for u, v, _ in og.arcs), og.h1, og.h2, og.s_arcs)
    assert has_positive_cycle(zeroed) == (False, None)


def test_cycle_to_matching_soundness(two_couple):
    inst, m = two_couple
    aux = build_aux_graph(inst, m, Fraction(2))
    og = orient(aux, inst)
    positive, cycle = has_positive_cycle(og)
    assert positive
    pm = cycle_to_perfect_matching(aux, cycle)
    d = decompose_pm_weight(aux, pm)
    assert d.identity_holds
    assert d.total_weight > 0


def test_predicate_mp_two_couple(two_couple):
    inst, m = two_couple
    assert predicate_mp(inst, m, Fraction(2))[0]
    # at k = n - 1 = 3 the answer matches brute force (u = 3, not > 3)
    assert predicate_mp(inst, m, Fraction(3))[0] == (oracle_factor(inst, m) > 3)
    # a popular matching is never beaten at k = 1
    rival = Matching.from_pairs([(0, 3), (1, 2)])  # m1-w2, m2-w1
    assert oracle_factor(inst, rival) <= 1
    assert not predicate_mp(inst, rival, Fraction(1))[0]


def test_fastpath_equals_general_path_randomized():
    rng = random.Random(99)
    for trial in range(60):
        inst = random_instance(
            "MP", rng.randint(0, 6), density=0.8, tie_probability=0.3, seed=trial
        )
        m = random_matching(inst, seed=trial + 1)
        k = Fraction(rng.randint(0, 5), rng.randint(1, 6))
        fast = predicate_mp(inst, m, k)[0]
        general = predicate_gt(inst, m, k, fastpath="off")[0]
        assert fast == general, (trial, k)
