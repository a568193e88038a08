import math
import random
from fractions import Fraction

import pytest

from popfactor import Matching, random_instance
from popfactor.engine import CandidateSet
from popfactor.instance import Instance, PreferenceList
from popfactor.io import random_matching
from popfactor.oracle import all_matchings, count_matchings, oracle_factor, oracle_margin


def test_four_cycle_enumeration(four_cycle):
    inst, _ = four_cycle
    matchings = all_matchings(inst)
    # complete acceptability on 4 people: empty + 6 single pairs + 3 perfect
    assert len(matchings) == 10
    assert len(matchings) == count_matchings(inst)
    assert len(set(matchings)) == 10


def test_tiny_enumerations():
    inst = Instance(
        "RP",
        ("a1", "a2"),
        (PreferenceList((frozenset({1}),)), PreferenceList((frozenset({0}),))),
    )
    assert len(all_matchings(inst)) == 2
    loner = Instance("RP", ("a1",), (PreferenceList(()),))
    assert all_matchings(loner) == [Matching(frozenset())]


def test_cap_enforced():
    inst = random_instance("RP", 11, density=0.5, seed=0)
    with pytest.raises(ValueError):
        all_matchings(inst)
    assert len(all_matchings(inst, cap=11)) == count_matchings(inst, cap=11)


def test_oracle_four_cycle_values(four_cycle):
    inst, ms = four_cycle
    assert oracle_factor(inst, ms["m2"]) == Fraction(3)
    assert oracle_margin(inst, ms["m2"]) == 2
    assert oracle_factor(inst, ms["m1"]) == math.inf
    assert oracle_margin(inst, ms["m1"]) == 1


def test_oracle_chain_value(chain):
    inst, m = chain
    assert oracle_factor(inst, m) == Fraction(3)


def test_oracle_factor_in_candidate_set():
    rng = random.Random(8)
    for trial in range(40):
        inst = random_instance(
            "RP", rng.randint(0, 6), density=0.7, tie_probability=0.3, seed=trial
        )
        m = random_matching(inst, seed=trial + 4)
        factor = oracle_factor(inst, m)
        if factor != math.inf and factor != 0:
            assert CandidateSet.for_instance(inst).contains(factor)


def test_relabeling_invariance():
    rng = random.Random(21)
    for trial in range(15):
        n = rng.randint(2, 5)
        inst = random_instance("RP", n, density=0.8, tie_probability=0.2, seed=trial)
        m = random_matching(inst, seed=trial + 8)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Instance(
            inst.kind,
            tuple(inst.names[perm.index(i)] for i in range(n)),
            tuple(
                PreferenceList(
                    tuple(frozenset(perm[b] for b in tier) for tier in inst.prefs[perm.index(i)].tiers)
                )
                for i in range(n)
            ),
            None,
            tuple(inst.weights[perm.index(i)] for i in range(n)),
        )
        m2 = Matching.from_pairs((perm[a], perm[b]) for a, b in m.pairs)
        assert oracle_factor(relabeled, m2) == oracle_factor(inst, m)
        assert oracle_margin(relabeled, m2) == oracle_margin(inst, m)
