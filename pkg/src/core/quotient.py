"""
Quotients of weighted 2-complexes by vertex partitions.

The vertex relation is extended to edges (endpoint classes agree) and to cells (boundary
images agree); merged classes take the gcd of their weights. Strict mode refuses every
degeneracy, lax mode collapses edges and cells onto vertices where a morphism may.
"""

import logging
from enum import Enum
from typing import Dict, List, Tuple

from src.core.complex import (
    Cell,
    Cycle,
    Edge,
    EdgeKey,
    Vertex,
    VertexPartition,
    WeightedComplex,
    edge_key,
    least_in_orbit,
    validate,
)
from src.core.weights import Weight, format_weight, weight_gcd
from src.exceptions import DegeneracyError, ValidationError
from src.morphism import Morphism, collapse_walk, extend_from_vertex_map

logger = logging.getLogger("Quotient")


class QuotientMode(Enum):
    STRICT = "strict"
    LAX = "lax"


def quotient(complex_: WeightedComplex, partition: VertexPartition,
             mode: QuotientMode = QuotientMode.STRICT) -> Tuple[WeightedComplex, Morphism]:
    """
    Quotient complex and its canonical projection.

    Each class is named by its least member. Returns ``(quotient, projection)``.
    """
    if not partition.covers(complex_.vertices):
        raise ValidationError("partition does not cover the vertex set",
                              details={"vertices": len(complex_.vertices), "blocks": len(partition.blocks)})
    strict = mode is QuotientMode.STRICT
    rep = partition.representative
    vertices = sorted({rep(v) for v in complex_.vertices})

    edge_classes: Dict[EdgeKey, List[Weight]] = {}
    for e in complex_.edges:
        a, b = rep(e.u), rep(e.v)
        if a == b:
            if strict:
                raise DegeneracyError(f"edge {e} becomes loop at class {a}",
                                      {"edge": list(e.key), "class": list(partition.block_of(a))})
            continue
        edge_classes.setdefault(edge_key(a, b), []).append(e.weight)

    edges = []
    for key, ws in sorted(edge_classes.items()):
        w = weight_gcd(ws)
        if w == 1:
            raise DegeneracyError(f"merged edge weight 1 violates weight axiom at {{{key[0]},{key[1]}}}",
                                  {"class": list(key), "weights": [format_weight(x) for x in ws]})
        edges.append(Edge(key[0], key[1], w))

    cell_classes: Dict[Tuple[Vertex, ...], List[Weight]] = {}
    for f in complex_.cells:
        walk = collapse_walk([rep(v) for v in f.boundary.vertices])
        if len(walk) == 1:
            if strict:
                raise DegeneracyError(f"boundary of {f} collapses to class {walk[0]}",
                                      {"cell": list(f.boundary.vertices), "class": list(partition.block_of(walk[0]))})
            continue
        if len(walk) < 3:
            raise DegeneracyError(f"boundary of {f} collapses to length {len(walk)}",
                                  {"cell": list(f.boundary.vertices), "image": list(walk)})
        if len(set(walk)) != len(walk):
            raise DegeneracyError(f"boundary of {f} is not a cycle in the quotient",
                                  {"cell": list(f.boundary.vertices), "image": list(walk)})
        cell_classes.setdefault(least_in_orbit(walk), []).append(f.weight)

    cells = []
    for boundary, ws in sorted(cell_classes.items()):
        w = weight_gcd(ws)
        if w == 1:
            raise DegeneracyError(f"merged cell weight 1 violates weight axiom at ({','.join(boundary)})",
                                  {"class": list(boundary), "weights": ws})
        cells.append(Cell(Cycle(boundary), w))

    result = WeightedComplex(tuple(vertices), tuple(edges), tuple(cells))
    validate(result).raise_if_invalid("quotient")
    projection = extend_from_vertex_map(complex_, result, {v: rep(v) for v in complex_.vertices})
    logger.debug(f"Quotient ({mode.value}): {complex_.summary()} -> {result.summary()}")
    return result, projection
