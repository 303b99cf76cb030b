"""Core data model - weights, cycles, weighted 2-complexes, partitions"""

from .complex import (
    Axiom,
    Cell,
    Cycle,
    Edge,
    ValidationReport,
    VertexPartition,
    Violation,
    WeightedComplex,
    cycle_canonicalize,
    edge_key,
    empty_complex,
    is_weighted_graph,
    one_skeleton,
    point_complex,
    validate,
)
from .weights import INFINITY, Weight, divides, weight_gcd, weight_lcm

__all__ = [
    "Axiom",
    "Cell",
    "Cycle",
    "Edge",
    "INFINITY",
    "ValidationReport",
    "VertexPartition",
    "Violation",
    "Weight",
    "WeightedComplex",
    "cycle_canonicalize",
    "divides",
    "edge_key",
    "empty_complex",
    "is_weighted_graph",
    "one_skeleton",
    "point_complex",
    "validate",
    "weight_gcd",
    "weight_lcm",
]
