import pytest

from popfactor import golden
from popfactor.instance import InvalidMatchingError
from popfactor.io import (
    ParseError,
    blocking_pairs,
    gale_shapley,
    parse_instance,
    parse_matching,
    random_instance,
    serialize_instance,
    serialize_matching,
)


GOLDEN_TEXTS = [golden.FOUR_CYCLE_RP, golden.CHAIN_RP, golden.TWO_COUPLE_MP]


@pytest.mark.parametrize("text", GOLDEN_TEXTS)
def test_round_trip(text):
    inst = parse_instance(text)
    normalized = serialize_instance(inst)
    assert serialize_instance(parse_instance(normalized)) == normalized


def test_parse_four_cycle(four_cycle):
    inst, _ = four_cycle
    assert inst.kind == "RP" and inst.n == 4
    assert inst.names == ("a1", "a2", "a3", "a4")
    assert inst.prefs[1].tiers[0] == frozenset({0, 3})  # tie (a1 a4)


def test_parse_empty_instance():
    inst = parse_instance("RP 0\n")
    assert inst.n == 0


def test_parse_weights_and_genders():
    inst = parse_instance("MP 2\nWEIGHTS 3 1\nGENDERS m w\nm1: w1\nw1: m1\n")
    assert inst.weights == (3, 1)
    assert inst.genders == ("m", "w")
    assert not inst.is_unweighted


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("RP 2\na1: zz\na2: a1\n", "unknown person"),
        ("RP 2\na1: a2 a2\na2: a1\n", "duplicate entry"),
        ("MP 2\nGENDERS m x\nm1: w1\nw1: m1\n", "gender tags"),
        ("RP 2\nWEIGHTS -1 2\na1: a2\na2: a1\n", "negative weight"),
        ("RP 2\na1: (a2\na2: a1\n", "unclosed"),
        ("XX 2\na1: a2\na2: a1\n", "bad header"),
        ("RP 3\na1: a2\na2: a1\n", "expected 3 preference lines"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert fragment in str(exc.value)


def test_parse_matching(chain):
    inst, m = chain
    assert parse_matching("a1 a2\na3 a4\n", inst) == m
    assert parse_matching("", inst).pairs == frozenset()
    with pytest.raises(InvalidMatchingError):
        parse_matching("a1 a1\n", inst)
    with pytest.raises(ParseError):
        parse_matching("a1 nobody\n", inst)


def test_matching_round_trip(chain):
    inst, m = chain
    assert parse_matching(serialize_matching(m, inst), inst) == m


def test_gale_shapley_two_couple(two_couple):
    inst, _ = two_couple
    m = gale_shapley(inst)
    assert blocking_pairs(inst, m) == []
    assert len(m) == 2


def test_gale_shapley_single_couple():
    inst = parse_instance("MP 2\nGENDERS m w\nm1: w1\nw1: m1\n")
    m = gale_shapley(inst)
    assert m.pairs == frozenset({(0, 1)})


def test_gale_shapley_rejects_ties_and_rp(four_cycle):
    inst, _ = four_cycle
    with pytest.raises(ValueError):
        gale_shapley(inst)
    tied = parse_instance("MP 4\nGENDERS m m w w\nm1: (w1 w2)\nm2: w1\nw1: m1 m2\nw2: m1\n")
    with pytest.raises(ValueError):
        gale_shapley(tied)


def test_gale_shapley_random_strict_instances():
    for seed in range(20):
        inst = random_instance("MP", 10, density=0.7, tie_probability=0.0, seed=seed)
        m = gale_shapley(inst)
        assert blocking_pairs(inst, m) == []


def test_random_instance_deterministic():
    a = random_instance("RP", 6, density=0.6, tie_probability=0.4, seed=42)
    b = random_instance("RP", 6, density=0.6, tie_probability=0.4, seed=42)
    assert a == b
    assert serialize_instance(a) == serialize_instance(b)


def test_random_instance_strict_when_tie_prob_zero():
    inst = random_instance("RP", 8, density=0.9, tie_probability=0.0, seed=1)
    assert all(len(t) == 1 for p in inst.prefs for t in p.tiers)


def test_random_instance_full_density_mp_complete_bipartite():
    inst = random_instance("MP", 8, density=1.0, seed=5)
    assert len(inst.acceptable_pairs()) == 8 * 8 // 4


def test_random_instance_mutual_acceptability():
    inst = random_instance("MP", 7, density=0.5, tie_probability=0.3, seed=9)
    for a in range(inst.n):
        for b in inst.prefs[a].listed():
            assert a in inst.prefs[b].listed()


def test_random_instance_bad_params():
    with pytest.raises(ValueError):
        random_instance("RP", -1)
    with pytest.raises(ValueError):
        random_instance("RP", 3, density=1.5)
    with pytest.raises(ValueError):
        random_instance("RP", 3, weight_range=(4, 2))
