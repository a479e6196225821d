"""Negacyclic codes over F_p + uF_p + vF_p + uvF_p with u^2 = v^2 = 0, uv = vu."""

from .codes import (
    CyclicCode,
    IdealCode,
    NegacyclicCode,
    from_generators,
    free_rank,
    minimal_generator_count,
    parse_code,
    rank,
    report,
    spanning_set,
    verify_structure,
)
from .distance import (
    DistanceReport,
    PAdicExpansion,
    distance_formula,
    distance_report,
    hamming_weight,
    min_distance_enum,
    min_distance_support,
    p_adic_classify,
)
from .fieldpoly import FpPoly, PrimeField
from .ring import ModulusKind, RElem, RPoly, phi

__all__ = [
    "CyclicCode", "DistanceReport", "FpPoly", "IdealCode", "ModulusKind", "NegacyclicCode",
    "PAdicExpansion", "PrimeField", "RElem", "RPoly", "distance_formula", "distance_report",
    "free_rank", "from_generators", "hamming_weight", "min_distance_enum", "min_distance_support",
    "minimal_generator_count", "p_adic_classify", "parse_code", "phi", "rank", "report",
    "spanning_set", "verify_structure",
]
