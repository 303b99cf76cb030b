"""
Morphisms of weighted 2-complexes.

A morphism is determined by its vertex map; edge and cell images are always derived
by ``extend_from_vertex_map`` and never supplied by callers.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from src.core.complex import (
    Cell,
    Cycle,
    Edge,
    EdgeKey,
    Vertex,
    WeightedComplex,
    edge_key,
    least_in_orbit,
    one_skeleton,
)
from src.config import load_config
from src.core.weights import divides, format_weight
from src.exceptions import CompositionError, HomSetLimitExceeded, MorphismError
from src.logging_debug import log_execution

logger = logging.getLogger("Morphism")


class ImageKind(Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    CELL = "cell"


@dataclass(frozen=True)
class Image:
    """Where an element lands: a target vertex, edge (by key) or cell (by canonical boundary)"""
    kind: ImageKind
    key: Union[Vertex, EdgeKey, Tuple[Vertex, ...]]

    @classmethod
    def vertex(cls, v: Vertex) -> "Image":
        return cls(ImageKind.VERTEX, v)

    def __str__(self):
        if self.kind is ImageKind.VERTEX:
            return str(self.key)
        if self.kind is ImageKind.EDGE:
            return "{" + ",".join(self.key) + "}"
        return "(" + ",".join(self.key) + ")"


@dataclass(frozen=True)
class Morphism:
    """Validated structure-preserving map; equality is decided by the vertex map alone"""
    source: WeightedComplex
    target: WeightedComplex
    vertex_map: Tuple[Tuple[Vertex, Vertex], ...]
    edge_map: Tuple[Tuple[EdgeKey, Image], ...] = field(default=(), compare=False, repr=False)
    cell_map: Tuple[Tuple[Tuple[Vertex, ...], Image], ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def vmap(self) -> Dict[Vertex, Vertex]:
        return dict(self.vertex_map)

    @cached_property
    def _edge_images(self) -> Dict[EdgeKey, Image]:
        return dict(self.edge_map)

    @cached_property
    def _cell_images(self) -> Dict[Tuple[Vertex, ...], Image]:
        return dict(self.cell_map)

    def __call__(self, v: Vertex) -> Vertex:
        return self.vmap[v]

    def image_of_edge(self, u: Vertex, v: Vertex) -> Image:
        return self._edge_images[edge_key(u, v)]

    def image_of_cell(self, boundary: Cycle) -> Image:
        return self._cell_images[boundary.vertices]

    def image_of(self, element: Union[Vertex, Edge, Cell]) -> Image:
        if isinstance(element, Edge):
            return self.image_of_edge(element.u, element.v)
        if isinstance(element, Cell):
            return self.image_of_cell(element.boundary)
        return Image.vertex(self.vmap[element])

    def __str__(self):
        pairs = ", ".join(f"{a}->{b}" for a, b in self.vertex_map)
        return f"Morphism({pairs})"


def collapse_walk(walk: Sequence[Vertex]) -> Tuple[Vertex, ...]:
    """Drop the entries of collapsed edges from a closed walk (cyclically)"""
    out: List[Vertex] = []
    for x in walk:
        if not out or out[-1] != x:
            out.append(x)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return tuple(out)


def extend_from_vertex_map(source: WeightedComplex, target: WeightedComplex,
                           vmap: Mapping[Vertex, Vertex]) -> Morphism:
    """Extend a vertex function to the unique morphism it determines, or explain why it cannot"""
    vm = dict(vmap)
    missing = [v for v in source.vertices if v not in vm]
    if missing:
        raise MorphismError("vertex map is not total on the source", {"missing": missing})
    extra = sorted(set(vm) - set(source.vertices))
    if extra:
        raise MorphismError("vertex map mentions non-source vertices", {"extra": extra})
    outside = [v for v in source.vertices if not target.has_vertex(vm[v])]
    if outside:
        raise MorphismError(f"image of {outside[0]} is not a target vertex",
                            {"vertex": outside[0], "image": vm[outside[0]]})

    edge_map: List[Tuple[EdgeKey, Image]] = []
    for e in source.edges:
        a, b = vm[e.u], vm[e.v]
        if a == b:
            edge_map.append((e.key, Image.vertex(a)))
            continue
        t = target.edge(a, b)
        if t is None:
            raise MorphismError(f"missing target edge {{{a},{b}}} for edge {e}",
                                {"edge": list(e.key), "image": [a, b]})
        if not divides(t.weight, e.weight):
            raise MorphismError(
                f"{format_weight(e.weight)} not divisible by {format_weight(t.weight)}",
                {"edge": list(e.key), "image": list(t.key)})
        edge_map.append((e.key, Image(ImageKind.EDGE, t.key)))

    cell_map: List[Tuple[Tuple[Vertex, ...], Image]] = []
    for f in source.cells:
        reduced = collapse_walk([vm[v] for v in f.boundary.vertices])
        if len(reduced) == 1:
            cell_map.append((f.boundary.vertices, Image.vertex(reduced[0])))
            continue
        if len(reduced) < 3:
            raise MorphismError(f"boundary of {f} collapses to length {len(reduced)}",
                                {"cell": list(f.boundary.vertices), "image": list(reduced)})
        if len(set(reduced)) != len(reduced):
            raise MorphismError(f"image of {f} is not a cycle",
                                {"cell": list(f.boundary.vertices), "image": list(reduced)})
        canonical = Cycle(least_in_orbit(reduced))
        t = target.cell(canonical)
        if t is None:
            raise MorphismError(f"image {canonical} of {f} is not a cell boundary in the target",
                                {"cell": list(f.boundary.vertices), "image": list(canonical.vertices)})
        if not divides(t.weight, f.weight):
            raise MorphismError(f"{f.weight} not divisible by {t.weight}",
                                {"cell": list(f.boundary.vertices), "image": list(canonical.vertices)})
        cell_map.append((f.boundary.vertices, Image(ImageKind.CELL, canonical.vertices)))

    return Morphism(source, target, tuple((v, vm[v]) for v in source.vertices),
                    tuple(edge_map), tuple(cell_map))


def identity(complex_: WeightedComplex) -> Morphism:
    return extend_from_vertex_map(complex_, complex_, {v: v for v in complex_.vertices})


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f"""
    if f.target != g.source:
        raise CompositionError("target of the first morphism is not the source of the second",
                               {"f_target": f.target.summary(), "g_source": g.source.summary()})
    return extend_from_vertex_map(f.source, g.target, {v: g.vmap[w] for v, w in f.vertex_map})


def skeleton_inclusion(complex_: WeightedComplex) -> Morphism:
    """Inclusion of the underlying weighted graph"""
    return extend_from_vertex_map(one_skeleton(complex_), complex_, {v: v for v in complex_.vertices})


@log_execution()
def morphisms_between(source: WeightedComplex, target: WeightedComplex,
                      limit: Optional[int] = None) -> List[Morphism]:
    """
    Every morphism source -> target, by exhaustive vertex-map enumeration.

    ``limit`` caps the number of vertex maps tried; it defaults to the configured ``hom_limit``.
    """
    limit = load_config().hom_limit if limit is None else limit
    count = len(target.vertices) ** len(source.vertices)
    if count > limit:
        raise HomSetLimitExceeded(f"{count} vertex maps exceed the limit {limit}",
                                  {"maps": count, "limit": limit})
    found: List[Morphism] = []
    for images in product(target.vertices, repeat=len(source.vertices)):
        try:
            found.append(extend_from_vertex_map(source, target, dict(zip(source.vertices, images))))
        except MorphismError:
            continue
    logger.debug(f"Hom-set enumeration: {len(found)} of {count} vertex maps extend")
    return found


def check_diagrams(m: Morphism) -> List[str]:
    """
    Re-check a morphism against the definition, independently of its construction:
    source/target/involution compatibility on every dart, boundary compatibility on
    every cell and weight divisibility on every element. Returns the problems found.
    """
    problems: List[str] = []
    vm = m.vmap
    src, tgt = m.source, m.target

    for v in src.vertices:
        if not tgt.has_vertex(vm.get(v, "")):
            problems.append(f"vertex {v} has no target vertex image")
    if problems:
        return problems

    for e in src.edges:
        image = m.image_of_edge(e.u, e.v)
        for x, y in e.darts():
            if image.kind is ImageKind.VERTEX:
                if not (vm[x] == vm[y] == image.key):
                    problems.append(f"dart ({x},{y}) collapses to {image} but its ends do not")
                continue
            t = tgt.edge(*image.key)
            if t is None:
                problems.append(f"edge {e} maps to missing edge {image}")
                break
            image_dart = (vm[x], vm[y])
            if image_dart not in t.darts():
                problems.append(f"dart ({x},{y}) is not sent to a dart of {image}")
            if (vm[y], vm[x]) != tgt.involution(image_dart):
                problems.append(f"involution does not commute on dart ({x},{y})")
            if not divides(t.weight, e.weight):
                problems.append(f"weight of {e} not divisible by weight of {image}")

    for f in src.cells:
        image = m.image_of_cell(f.boundary)
        walk = collapse_walk([vm[v] for v in f.boundary.vertices])
        if image.kind is ImageKind.VERTEX:
            if walk != (image.key,):
                problems.append(f"{f} maps to vertex {image} but its boundary does not collapse there")
            continue
        t = tgt.cell(Cycle(image.key))
        if t is None:
            problems.append(f"{f} maps to missing cell {image}")
            continue
        if len(walk) < 3 or least_in_orbit(walk) != t.boundary.vertices:
            problems.append(f"boundary of {f} does not map onto the boundary of {image}")
        if not divides(t.weight, f.weight):
            problems.append(f"weight of {f} not divisible by weight of {image}")
    return problems
