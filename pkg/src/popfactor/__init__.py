"""Exact unpopularity factor and margin of matchings in roommates and
marriage instances, with ties and optional integer voting weights."""

from .instance import (
    MP,
    RP,
    Instance,
    InvalidMatchingError,
    Matching,
    PreferenceList,
    delta,
    phi,
    rank_of,
    validate_matching,
)
from .auxgraph import AuxGraph, build_aux_graph, decompose_pm_weight, delta_term
from .engine import (
    CandidateSet,
    FactorReport,
    InternalConsistencyError,
    is_popular,
    predicate_gt,
    rational_binary_search,
    unpopularity_factor,
    unpopularity_margin,
)
from .io import (
    gale_shapley,
    parse_instance,
    parse_matching,
    random_instance,
    serialize_instance,
    serialize_matching,
)
from .oracle import all_matchings, oracle_factor, oracle_margin

__all__ = [
    "MP",
    "RP",
    "Instance",
    "InvalidMatchingError",
    "InternalConsistencyError",
    "Matching",
    "PreferenceList",
    "AuxGraph",
    "CandidateSet",
    "FactorReport",
    "all_matchings",
    "build_aux_graph",
    "decompose_pm_weight",
    "delta",
    "delta_term",
    "gale_shapley",
    "is_popular",
    "oracle_factor",
    "oracle_margin",
    "parse_instance",
    "parse_matching",
    "phi",
    "predicate_gt",
    "random_instance",
    "rank_of",
    "rational_binary_search",
    "serialize_instance",
    "serialize_matching",
    "unpopularity_factor",
    "unpopularity_margin",
    "validate_matching",
]
