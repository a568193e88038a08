import pytest

from popfactor import golden
from popfactor.io import parse_instance, parse_matching


@pytest.fixture
def four_cycle():
    inst = parse_instance(golden.FOUR_CYCLE_RP)
    return inst, {
        "m0": parse_matching(golden.FOUR_CYCLE_RP_M0, inst),
        "m1": parse_matching(golden.FOUR_CYCLE_RP_M1, inst),
        "m2": parse_matching(golden.FOUR_CYCLE_RP_M2, inst),
    }


@pytest.fixture
def chain():
    inst = parse_instance(golden.CHAIN_RP)
    return inst, parse_matching(golden.CHAIN_RP_M, inst)


@pytest.fixture
def two_couple():
    inst = parse_instance(golden.TWO_COUPLE_MP)
    return inst, parse_matching(golden.TWO_COUPLE_MP_M, inst)
