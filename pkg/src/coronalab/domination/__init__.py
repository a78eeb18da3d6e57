"""Exact domination-type parameters, validators and corona constructions."""

from .basic import (
    connected_domination_number,
    distance_k_domination_number,
    domination_number,
    independence_number,
    independent_domination_number,
    k_domination_number,
)
from .constructions import KINDS, CoronaWitness, construct_corona_witness
from .location import (
    ld_case_classify,
    locating_domination_number,
    location_numbers,
    metric_dimension,
    minimum_locating_dominating_sets,
    resolving_domination_number,
)
from .partitions import domatic_number, idomatic_number, independent_partition_exists
from .results import DominationResult, LdCase, RomanAssignment
from .roman import minimum_roman_assignments, roman_domination

__all__ = [
    "KINDS",
    "CoronaWitness",
    "DominationResult",
    "LdCase",
    "RomanAssignment",
    "connected_domination_number",
    "construct_corona_witness",
    "distance_k_domination_number",
    "domatic_number",
    "domination_number",
    "idomatic_number",
    "independence_number",
    "independent_domination_number",
    "independent_partition_exists",
    "k_domination_number",
    "ld_case_classify",
    "locating_domination_number",
    "location_numbers",
    "metric_dimension",
    "minimum_locating_dominating_sets",
    "minimum_roman_assignments",
    "resolving_domination_number",
    "roman_domination",
]
