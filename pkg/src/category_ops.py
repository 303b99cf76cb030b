"""
Categorical constructions on weighted 2-complexes
Coproducts, strong products, equalizers and coequalizers with their universal-property
factorizations, plus the free complex / vertex set adjunction.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.complex import (
    Cell,
    Cycle,
    Edge,
    Vertex,
    VertexPartition,
    WeightedComplex,
    least_in_orbit,
    validate,
)
from src.core.quotient import QuotientMode, quotient
from src.core.weights import weight_lcm
from src.exceptions import AdjunctionError, ConstructionError, FactorizationError, MorphismError
from src.logging_debug import log_execution
from src.morphism import Morphism, compose, extend_from_vertex_map

logger = logging.getLogger("CategoryOps")


class ConstructionKind(Enum):
    COPRODUCT = "coproduct"
    PRODUCT = "product"
    EQUALIZER = "equalizer"
    COEQUALIZER = "coequalizer"


@dataclass(frozen=True)
class ConstructionResult:
    """
    Outcome of a construction: the object, its canonical legs and what it was built from.

    Legs are the injections of a coproduct, the projections of a product, the embedding
    of an equalizer or the projection of a coequalizer.
    """
    kind: ConstructionKind
    object: WeightedComplex
    legs: Tuple[Morphism, ...]
    parts: Tuple[WeightedComplex, ...] = ()
    pair: Optional[Tuple[Morphism, Morphism]] = None
    coordinates: Tuple[Tuple[Vertex, Tuple[Vertex, ...]], ...] = ()

    @property
    def leg(self) -> Morphism:
        return self.legs[0]

    def coordinate_map(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        return dict(self.coordinates)


def union_label(index: int, v: Vertex) -> Vertex:
    return f"{index}:{v}"


def tuple_label(coords: Sequence[Vertex]) -> Vertex:
    return "(" + ",".join(coords) + ")"


def disjoint_union(parts: Sequence[WeightedComplex]) -> ConstructionResult:
    """Coproduct; part j (1-based) is relabeled with the prefix ``j:``"""
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    cells: List[Tuple[List[Vertex], int]] = []
    for j, c in enumerate(parts, start=1):
        vertices.extend(union_label(j, v) for v in c.vertices)
        edges.extend(Edge.of(union_label(j, e.u), union_label(j, e.v), e.weight) for e in c.edges)
        cells.extend(([union_label(j, v) for v in f.boundary.vertices], f.weight) for f in c.cells)
    union = WeightedComplex.create(vertices, edges, cells)
    validate(union).raise_if_invalid("disjoint union")

    legs = tuple(
        extend_from_vertex_map(c, union, {v: union_label(j, v) for v in c.vertices})
        for j, c in enumerate(parts, start=1)
    )
    return ConstructionResult(ConstructionKind.COPRODUCT, union, legs, tuple(parts))


def _element_options(c: WeightedComplex, higher: Iterable) -> List[Tuple[str, object]]:
    return [("v", v) for v in c.vertices] + [("x", x) for x in higher]


@log_execution()
def strong_product(parts: Sequence[WeightedComplex]) -> ConstructionResult:
    """
    Product. Vertices are vertex tuples; an edge tuple moves every edge coordinate along
    one of its darts while vertex coordinates stay fixed; a cell tuple walks every cell
    coordinate around its canonical boundary in step. Weights are lcm of coordinate weights.

    Cell coordinates must share one boundary length. This replaces the lcm-length diagonal:
    that walk winds a shorter boundary more than once, so the projections would not extend
    to morphisms. Unequal lengths raise ``ConstructionError``.
    """
    if not parts:
        raise ConstructionError("product of an empty list of complexes")

    labels: Dict[Tuple[Vertex, ...], Vertex] = {}
    taken = set()
    for coords in product(*(c.vertices for c in parts)):
        label = tuple_label(coords)
        if label in taken:
            raise ConstructionError(f"product label {label} is ambiguous", {"coordinates": list(coords)})
        taken.add(label)
        labels[coords] = label

    edges: List[Edge] = []
    for choice in product(*(_element_options(c, c.edges) for c in parts)):
        moving = [i for i, (kind, _) in enumerate(choice) if kind == "x"]
        if not moving:
            continue
        weight = weight_lcm(choice[i][1].weight for i in moving)
        first, rest = moving[0], moving[1:]
        for darts in product(*(choice[i][1].darts() for i in rest)):
            oriented = {first: choice[first][1].darts()[0], **dict(zip(rest, darts))}
            tail = tuple(oriented[i][0] if i in oriented else choice[i][1] for i in range(len(parts)))
            head = tuple(oriented[i][1] if i in oriented else choice[i][1] for i in range(len(parts)))
            edges.append(Edge.of(labels[tail], labels[head], weight))

    cells: List[Cell] = []
    seen: Dict[Tuple[Vertex, ...], Tuple[str, ...]] = {}
    for choice in product(*(_element_options(c, c.cells) for c in parts)):
        moving = [i for i, (kind, _) in enumerate(choice) if kind == "x"]
        if not moving:
            continue
        name = tuple(str(x) for _, x in choice)
        lengths = {len(choice[i][1].boundary.vertices) for i in moving}
        if len(lengths) > 1:
            raise ConstructionError(f"diagonal cycle for {name} winds unevenly: boundary lengths {sorted(lengths)}",
                                    {"tuple": list(name)})
        length = lengths.pop()
        walk = []
        for step in range(length):
            coords = tuple(choice[i][1].boundary.vertices[step] if i in moving else choice[i][1]
                           for i in range(len(parts)))
            walk.append(labels[coords])
        boundary = least_in_orbit(walk)
        if boundary in seen:
            raise ConstructionError(f"product cells {seen[boundary]} and {name} share a boundary",
                                    {"boundary": list(boundary)})
        seen[boundary] = name
        cells.append(Cell(Cycle(boundary), weight_lcm(choice[i][1].weight for i in moving)))

    result = WeightedComplex.create(labels.values(), edges, cells)
    report = validate(result)
    if not report.ok:
        raise ConstructionError(f"product fails validation: {report.violations[0]}",
                                {"violations": report.lines()})

    legs = tuple(
        extend_from_vertex_map(result, c, {label: coords[j] for coords, label in labels.items()})
        for j, c in enumerate(parts)
    )
    logger.debug(f"Strong product of {len(parts)} complexes: {result.summary()}")
    return ConstructionResult(ConstructionKind.PRODUCT, result, legs, tuple(parts),
                              coordinates=tuple(sorted((label, coords) for coords, label in labels.items())))


def _require_parallel(phi: Morphism, psi: Morphism) -> None:
    if phi.source != psi.source or phi.target != psi.target:
        raise ConstructionError("morphisms are not parallel",
                                {"phi": [phi.source.summary(), phi.target.summary()],
                                 "psi": [psi.source.summary(), psi.target.summary()]})


def equalizer(phi: Morphism, psi: Morphism) -> ConstructionResult:
    """Largest sub-complex of the common source on which phi and psi agree"""
    _require_parallel(phi, psi)
    source = phi.source
    agree = {v for v in source.vertices if phi(v) == psi(v)}
    sub = WeightedComplex(
        tuple(v for v in source.vertices if v in agree),
        tuple(e for e in source.edges if e.u in agree and e.v in agree),
        tuple(f for f in source.cells if all(v in agree for v in f.boundary.vertices)),
    )
    eq = extend_from_vertex_map(sub, source, {v: v for v in sub.vertices})
    return ConstructionResult(ConstructionKind.EQUALIZER, sub, (eq,), pair=(phi, psi))


def coequalizer(phi: Morphism, psi: Morphism, mode: QuotientMode = QuotientMode.STRICT) -> ConstructionResult:
    """Quotient of the common target by the closure of phi(x) ~ psi(x)"""
    _require_parallel(phi, psi)
    partition = VertexPartition.from_pairs(phi.target.vertices,
                                           [(phi(v), psi(v)) for v in phi.source.vertices])
    result, coeq = quotient(phi.target, partition, mode)
    return ConstructionResult(ConstructionKind.COEQUALIZER, result, (coeq,), pair=(phi, psi))


def _extend_or_fail(source: WeightedComplex, target: WeightedComplex,
                    vmap: Mapping[Vertex, Vertex], what: str) -> Morphism:
    try:
        return extend_from_vertex_map(source, target, vmap)
    except MorphismError as e:
        raise FactorizationError(f"{what} does not extend to a morphism: {e.message}", e.details)


def factor_through(construction: ConstructionResult, sigma: Union[Morphism, Sequence[Morphism]],
                   target: Optional[WeightedComplex] = None) -> Morphism:
    """
    The unique rho making the universal-property triangle commute.

    Equalizer: eq o rho = sigma. Coequalizer: rho o coeq = sigma. Coproduct: rho o eta_j = sigma_j
    (``target`` is needed only for an empty coproduct). Product: pi_j o rho = sigma_j.
    """
    kind = construction.kind
    obj = construction.object

    if kind is ConstructionKind.EQUALIZER:
        phi, psi = construction.pair
        if sigma.target != phi.source:
            raise FactorizationError("sigma does not land in the source of the pair")
        if compose(phi, sigma) != compose(psi, sigma):
            raise FactorizationError("sigma does not equalize the pair")
        return _extend_or_fail(sigma.source, obj, sigma.vmap, "sigma")

    if kind is ConstructionKind.COEQUALIZER:
        phi, psi = construction.pair
        if sigma.source != phi.target:
            raise FactorizationError("sigma does not start at the target of the pair")
        if compose(sigma, phi) != compose(sigma, psi):
            raise FactorizationError("sigma does not coequalize the pair")
        coeq = construction.leg
        rho: Dict[Vertex, Vertex] = {}
        for v, cls in coeq.vertex_map:
            if rho.setdefault(cls, sigma(v)) != sigma(v):
                raise FactorizationError(f"sigma is not constant on the class of {cls}", {"class": cls})
        return _extend_or_fail(obj, sigma.target, rho, "induced map")

    legs = list(sigma)
    if len(legs) != len(construction.parts):
        raise FactorizationError(f"expected {len(construction.parts)} legs, got {len(legs)}")

    if kind is ConstructionKind.COPRODUCT:
        targets = {m.target for m in legs} | ({target} if target is not None else set())
        if len(targets) != 1:
            raise FactorizationError("cocone legs do not share one target")
        apex = targets.pop()
        rho = {}
        for j, (part, m) in enumerate(zip(construction.parts, legs), start=1):
            if m.source != part:
                raise FactorizationError(f"leg {j} does not start at part {j}")
            rho.update({union_label(j, v): w for v, w in m.vertex_map})
        return _extend_or_fail(obj, apex, rho, "cocone")

    sources = {m.source for m in legs}
    if len(sources) != 1:
        raise FactorizationError("cone legs do not share one source")
    apex = sources.pop()
    for j, (part, m) in enumerate(zip(construction.parts, legs), start=1):
        if m.target != part:
            raise FactorizationError(f"leg {j} does not land in factor {j}")
    labels = {coords: label for label, coords in construction.coordinates}
    rho = {x: labels[tuple(m(x) for m in legs)] for x in apex.vertices}
    return _extend_or_fail(apex, obj, rho, "cone")


def free_complex(generators: Iterable[Vertex]) -> WeightedComplex:
    """FC(M): the discrete complex on M"""
    return WeightedComplex.build(vertices=generators)


def underlying_vertices(complex_: WeightedComplex) -> frozenset:
    return frozenset(complex_.vertices)


def underlying_map(m: Morphism) -> Dict[Vertex, Vertex]:
    return dict(m.vertex_map)


def free_map(function: Mapping[Vertex, Vertex], domain: Iterable[Vertex],
             codomain: Iterable[Vertex]) -> Morphism:
    """FC applied to a set function"""
    return extend_from_vertex_map(free_complex(domain), free_complex(codomain), function)


def adjunction_transpose(m: Morphism) -> Dict[Vertex, Vertex]:
    """Hom(FC(X), Y) -> Hom_Set(X, V(Y))"""
    if m.source.edges or m.source.cells:
        raise AdjunctionError("transpose needs a morphism out of a free complex",
                              {"source": m.source.summary()})
    return dict(m.vertex_map)


def adjunction_inverse(function: Mapping[Vertex, Vertex], target: WeightedComplex) -> Morphism:
    """Hom_Set(X, V(Y)) -> Hom(FC(X), Y); X is the domain of ``function``"""
    try:
        return extend_from_vertex_map(free_complex(function.keys()), target, function)
    except MorphismError as e:
        raise AdjunctionError(f"not a function into the vertex set: {e.message}", e.details)
