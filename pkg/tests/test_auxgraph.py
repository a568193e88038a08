import random
from fractions import Fraction

import pytest

from popfactor import build_aux_graph, decompose_pm_weight, delta_term, random_instance
from popfactor.auxgraph import dump_edges, scale_to_integer
from popfactor.golden import CHAIN_RP_DUMP_K2, CHAIN_RP_DUMP_K3
from popfactor.io import random_matching
from popfactor.mwpm import WeightedGraph, enumerate_perfect_matchings


def test_delta_term_chain_table(chain):
    inst, m = chain
    a1, a2, a3, a4 = range(4)
    k = Fraction(2)
    assert delta_term(inst, m, a1, a3, k) == -2
    assert delta_term(inst, m, a3, a1, k) == 1
    assert delta_term(inst, m, a1, a2, k) == 0
    assert delta_term(inst, m, a2, a3, k) == 1
    assert delta_term(inst, m, a4, a1, k) == 1
    doubled = inst.with_weights([2, 2, 2, 2])
    assert delta_term(doubled, m, a1, a3, k) == -4


def test_delta_term_rejects_unacceptable_pair(chain):
    inst, m = chain
    with pytest.raises(ValueError):
        delta_term(inst, m, 1, 3, Fraction(2))  # a2/a4 do not list each other


def test_golden_dumps(chain):
    inst, m = chain
    assert dump_edges(build_aux_graph(inst, m, Fraction(2))) == CHAIN_RP_DUMP_K2
    assert dump_edges(build_aux_graph(inst, m, Fraction(3))) == CHAIN_RP_DUMP_K3


def test_copy_side_mirrors_and_s_weight_zero(chain):
    inst, m = chain
    g = build_aux_graph(inst, m, Fraction(5, 3))
    n = inst.n
    for (u, v), w in g.edges.items():
        if u < n and v < n:
            assert g.edges[(u + n, v + n)] == w
    assert g.weight_of(g.s_edges) == 0
    covered = sorted(v for p in g.s_edges for v in p)
    assert covered == list(range(2 * n))


def test_monotone_in_k(chain):
    inst, m = chain
    g_lo = build_aux_graph(inst, m, Fraction(3, 2))
    g_hi = build_aux_graph(inst, m, Fraction(5, 2))
    for key, w in g_hi.edges.items():
        assert w <= g_lo.edges[key]


def test_scale_to_integer():
    inst = random_instance("RP", 5, density=0.9, seed=3)
    m = random_matching(inst, seed=4)
    g = build_aux_graph(inst, m, Fraction(3, 2))
    scaled, factor = scale_to_integer(g)
    assert factor in (1, 2)
    for (u, v, w) in scaled:
        assert isinstance(w, int)
        assert g.edges[(u, v)] * factor == w
    # integer k needs no scaling
    g2 = build_aux_graph(inst, m, Fraction(2))
    _, factor2 = scale_to_integer(g2)
    assert factor2 == 1


def test_weighted_scaling_by_hand():
    # person of weight 2 preferring its partner contributes -2kw = -10/3*... :
    # at k = 5/3 an edge weight -10/3 scales by 3 to -10
    inst = random_instance("RP", 4, density=1.0, seed=0).with_weights([2, 1, 1, 1])
    m = random_matching(inst, seed=1)
    g = build_aux_graph(inst, m, Fraction(5, 3))
    scaled, factor = scale_to_integer(g)
    assert factor == 3
    lookup = {(u, v): w for u, v, w in scaled}
    for key, w in g.edges.items():
        assert lookup[key] == w * 3


def test_decompose_identity_on_s(chain):
    inst, m = chain
    g = build_aux_graph(inst, m, Fraction(2))
    d = decompose_pm_weight(g, g.s_edges)
    assert d.total_weight == 0
    assert d.term1 == d.term2 == 0
    assert d.identity_holds
    assert d.m1 == m and d.m2 == m


def test_decompose_identity_bold_edges(chain):
    # the positive perfect matching at k = 2: both halves pair (a2,a3),(a1,a4)
    inst, m = chain
    g = build_aux_graph(inst, m, Fraction(2))
    pm = {(1, 2), (0, 3), (5, 6), (4, 7)}
    d = decompose_pm_weight(g, pm)
    assert d.total_weight == 2
    assert d.identity_holds
    assert d.term1 == d.term2 == 1  # phi = 3 vs 1 at k = 2 on each half


def test_decompose_rejects_non_perfect(chain):
    inst, m = chain
    g = build_aux_graph(inst, m, Fraction(2))
    with pytest.raises(ValueError):
        decompose_pm_weight(g, {(0, 1)})


def test_decompose_identity_all_perfect_matchings_random():
    rng = random.Random(12)
    for trial in range(25):
        inst = random_instance(
            "RP", rng.randint(2, 5), density=0.8, tie_probability=0.3, seed=trial
        )
        m = random_matching(inst, seed=trial + 100)
        k = Fraction(rng.randint(0, 6), rng.randint(1, 4))
        g = build_aux_graph(inst, m, k)
        scaled, factor = scale_to_integer(g)
        wg = WeightedGraph(g.num_vertices, tuple(scaled))
        for pm in enumerate_perfect_matchings(wg):
            d = decompose_pm_weight(g, pm.pairs)
            assert d.identity_holds
            assert d.total_weight * factor == pm.total_weight
