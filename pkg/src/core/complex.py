"""
Weighted 2-complexes: vertices, undirected weighted edges and weighted 2-cells
whose boundaries are cycles.

Edges are stored undirected; the two darts (u, v) and (v, u) of an edge are implied,
so the involution and the source/target maps never need to be stored.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import chain
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.core.weights import INFINITY, Weight, format_weight, is_weight
from src.exceptions import CycleError, ValidationError

logger = logging.getLogger("Complex")

Vertex = str
EdgeKey = Tuple[Vertex, Vertex]
Dart = Tuple[Vertex, Vertex]


def edge_key(u: Vertex, v: Vertex) -> EdgeKey:
    """Unordered pair as a sorted tuple"""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Cycle:
    """
    Closed edge path with pairwise-distinct vertices.

    A single vertex is the cycle of length zero; otherwise the length is the number
    of vertices (equivalently edges).
    """
    vertices: Tuple[Vertex, ...]

    @property
    def length(self) -> int:
        return 0 if len(self.vertices) == 1 else len(self.vertices)

    @property
    def is_vertex(self) -> bool:
        return len(self.vertices) == 1

    def edge_keys(self) -> Tuple[EdgeKey, ...]:
        if self.length == 0:
            return ()
        vs = self.vertices
        return tuple(edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def darts(self) -> Tuple[Dart, ...]:
        if self.length == 0:
            return ()
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __str__(self):
        return "(" + ",".join(self.vertices) + ")"


def _orbit(seq: Sequence[Vertex]) -> Iterable[Tuple[Vertex, ...]]:
    n = len(seq)
    rev = tuple(reversed(seq))
    for i in range(n):
        yield tuple(seq[i:]) + tuple(seq[:i])
        yield rev[i:] + rev[:i]


def least_in_orbit(seq: Sequence) -> tuple:
    """Lexicographically least sequence among all rotations and the reversal"""
    return min(_orbit(tuple(seq)))


def cycle_canonicalize(raw: Sequence[Vertex]) -> Cycle:
    """Canonical rotation/reflection representative of a vertex cycle"""
    seq = tuple(raw)
    if len(seq) == 0:
        raise CycleError("empty vertex sequence")
    if len(set(seq)) != len(seq):
        raise CycleError(f"duplicate vertex in cycle {seq}", {"sequence": list(seq)})
    if len(seq) == 1:
        return Cycle(seq)
    if len(seq) == 2:
        raise CycleError(f"cycle of length 2 {seq}", {"sequence": list(seq)})
    return Cycle(least_in_orbit(seq))


@dataclass(frozen=True)
class Edge:
    u: Vertex
    v: Vertex
    weight: Weight

    @classmethod
    def of(cls, u: Vertex, v: Vertex, weight: Weight) -> "Edge":
        a, b = edge_key(u, v)
        return cls(a, b, weight)

    @property
    def key(self) -> EdgeKey:
        return (self.u, self.v)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def darts(self) -> Tuple[Dart, Dart]:
        return ((self.u, self.v), (self.v, self.u))

    def __str__(self):
        return "{" + self.u + "," + self.v + "}"


@dataclass(frozen=True)
class Cell:
    boundary: Cycle
    weight: Weight

    def __str__(self):
        return f"cell {self.boundary}"


class Axiom(Enum):
    """Axioms a candidate complex can violate"""
    VERTEX_ID = "vertex identifier"
    LOOP = "loop"
    MULTIPLE_EDGE = "multiple edge"
    UNKNOWN_VERTEX = "unknown vertex"
    EDGE_WEIGHT = "edge weight"
    BOUNDARY_EMPTY = "boundary of length zero"
    BOUNDARY_TOO_SHORT = "boundary too short"
    BOUNDARY_NOT_CYCLE = "boundary not a cycle"
    MISSING_EDGE = "missing edge"
    CELL_WEIGHT = "cell weight"
    DUPLICATE_BOUNDARY = "duplicate boundary"


@dataclass(frozen=True)
class Violation:
    element: str
    axiom: Axiom
    message: str

    def __str__(self):
        return f"{self.element}: {self.axiom.value}: {self.message}"

    def to_dict(self) -> Dict[str, str]:
        return {"element": self.element, "axiom": self.axiom.value, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> List[Axiom]:
        return [v.axiom for v in self.violations]

    def lines(self) -> List[str]:
        return [str(v) for v in self.violations]

    def raise_if_invalid(self, what: str = "complex") -> None:
        if self.violations:
            first = self.violations[0]
            raise ValidationError(f"invalid {what}: {first}", self.violations,
                                  {"violations": len(self.violations)})


EdgeSpec = Union[Edge, Tuple[Vertex, Vertex, Weight]]
CellSpec = Union[Cell, Tuple[Sequence[Vertex], Weight]]


@dataclass(frozen=True)
class WeightedComplex:
    """
    Finite weighted 2-complex held in canonical order.

    Use ``create`` to normalize arbitrary candidate data (no checks) and ``build`` to
    normalize and require every axiom.
    """
    vertices: Tuple[Vertex, ...] = ()
    edges: Tuple[Edge, ...] = ()
    cells: Tuple[Cell, ...] = ()
    _vertex_set: frozenset = field(init=False, repr=False, compare=False)
    _edge_index: Dict[EdgeKey, Edge] = field(init=False, repr=False, compare=False)
    _cell_index: Dict[Tuple[Vertex, ...], Cell] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_vertex_set", frozenset(self.vertices))
        edge_index: Dict[EdgeKey, Edge] = {}
        for e in self.edges:
            edge_index.setdefault(e.key, e)
        object.__setattr__(self, "_edge_index", edge_index)
        cell_index: Dict[Tuple[Vertex, ...], Cell] = {}
        for f in self.cells:
            cell_index.setdefault(f.boundary.vertices, f)
        object.__setattr__(self, "_cell_index", cell_index)

    def __hash__(self):
        return hash((self.vertices, self.edges, self.cells))

    @classmethod
    def create(cls, vertices: Iterable[Vertex] = (), edges: Iterable[EdgeSpec] = (),
               cells: Iterable[CellSpec] = ()) -> "WeightedComplex":
        vs = tuple(sorted(set(vertices)))
        es = []
        for e in edges:
            if not isinstance(e, Edge):
                u, v, w = e
                e = Edge.of(u, v, w)
            es.append(e)
        fs = []
        for f in cells:
            seq, w = (f.boundary.vertices, f.weight) if isinstance(f, Cell) else f
            try:
                boundary = cycle_canonicalize(seq)
            except CycleError:
                boundary = Cycle(tuple(seq))
            fs.append(Cell(boundary, w))
        es.sort(key=lambda e: e.key)
        fs.sort(key=lambda f: f.boundary.vertices)
        return cls(vs, tuple(es), tuple(fs))

    @classmethod
    def build(cls, vertices: Iterable[Vertex] = (), edges: Iterable[EdgeSpec] = (),
              cells: Iterable[CellSpec] = ()) -> "WeightedComplex":
        complex_ = cls.create(vertices, edges, cells)
        validate(complex_).raise_if_invalid()
        return complex_

    # lookups

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._vertex_set

    def edge(self, u: Vertex, v: Vertex) -> Optional[Edge]:
        return self._edge_index.get(edge_key(u, v))

    def cell(self, boundary: Cycle) -> Optional[Cell]:
        return self._cell_index.get(boundary.vertices)

    def darts(self) -> Iterable[Dart]:
        return chain.from_iterable(e.darts() for e in self.edges)

    @staticmethod
    def involution(dart: Dart) -> Dart:
        return (dart[1], dart[0])

    @staticmethod
    def alpha(dart: Dart) -> Vertex:
        return dart[0]

    @staticmethod
    def omega(dart: Dart) -> Vertex:
        return dart[1]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def summary(self) -> Dict[str, Any]:
        return {"vertices": len(self.vertices), "edges": len(self.edges), "cells": len(self.cells)}

    def __str__(self):
        edges = ", ".join(f"{e}^{format_weight(e.weight)}" for e in self.edges)
        cells = ", ".join(f"{f.boundary}^{f.weight}" for f in self.cells)
        return f"WeightedComplex(V=[{', '.join(self.vertices)}], E=[{edges}], F=[{cells}])"


def validate(complex_: WeightedComplex) -> ValidationReport:
    """Check every weighted 2-complex axiom; violations are returned, not raised"""
    violations: List[Violation] = []

    for v in complex_.vertices:
        if not isinstance(v, str) or not v:
            violations.append(Violation(f"vertex {v!r}", Axiom.VERTEX_ID,
                                        "vertex identifiers are non-empty strings"))

    seen_edges = set()
    for e in complex_.edges:
        name = f"edge {e}"
        if e.is_loop:
            violations.append(Violation(name, Axiom.LOOP, "edge joins a vertex to itself"))
        for end in (e.u, e.v):
            if not complex_.has_vertex(end):
                violations.append(Violation(name, Axiom.UNKNOWN_VERTEX, f"endpoint {end} is not a vertex"))
        if e.key in seen_edges:
            violations.append(Violation(name, Axiom.MULTIPLE_EDGE, "edge occurs more than once"))
        seen_edges.add(e.key)
        if not is_weight(e.weight) or e.weight == 1:
            violations.append(Violation(name, Axiom.EDGE_WEIGHT,
                                        f"edge weight must be in {{2,3,...}} or inf, got {e.weight!r}"))

    seen_boundaries = set()
    for f in complex_.cells:
        seq = f.boundary.vertices
        name = f"cell ({','.join(map(str, seq))})"
        if len(seq) == 0 or len(seq) == 1:
            violations.append(Violation(name, Axiom.BOUNDARY_EMPTY,
                                        "only vertices have boundaries of length zero"))
        elif len(seq) == 2:
            violations.append(Violation(name, Axiom.BOUNDARY_TOO_SHORT,
                                        "cell boundary must have length at least 3"))
        elif len(set(seq)) != len(seq):
            violations.append(Violation(name, Axiom.BOUNDARY_NOT_CYCLE, "boundary repeats a vertex"))
        else:
            for v in seq:
                if not complex_.has_vertex(v):
                    violations.append(Violation(name, Axiom.UNKNOWN_VERTEX, f"{v} is not a vertex"))
            for key in f.boundary.edge_keys():
                if complex_.edge(*key) is None:
                    violations.append(Violation(name, Axiom.MISSING_EDGE,
                                                f"boundary uses missing edge {{{key[0]},{key[1]}}}"))
            canonical = least_in_orbit(seq)
            if canonical in seen_boundaries:
                violations.append(Violation(name, Axiom.DUPLICATE_BOUNDARY,
                                            "another cell has the same boundary"))
            seen_boundaries.add(canonical)
        if f.weight is INFINITY or not is_weight(f.weight) or f.weight == 1:
            violations.append(Violation(name, Axiom.CELL_WEIGHT,
                                        f"cell weight must be a finite number >= 2, got {f.weight!r}"))

    report = ValidationReport(tuple(violations))
    if not report.ok:
        logger.debug(f"Validation found {len(violations)} violation(s)")
    return report


def empty_complex() -> WeightedComplex:
    """The initial object"""
    return WeightedComplex()


def point_complex(name: Vertex = "v") -> WeightedComplex:
    """The terminal object"""
    return WeightedComplex((name,))


def is_weighted_graph(complex_: WeightedComplex) -> bool:
    return not complex_.cells


def one_skeleton(complex_: WeightedComplex) -> WeightedComplex:
    """The weighted graph underlying a complex (2-cells dropped)"""
    return WeightedComplex(complex_.vertices, complex_.edges, ())


@dataclass(frozen=True)
class VertexPartition:
    """Partition of a vertex set into sorted blocks; each block is named by its least member"""
    blocks: Tuple[Tuple[Vertex, ...], ...]
    _index: Dict[Vertex, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: Dict[Vertex, int] = {}
        for i, block in enumerate(self.blocks):
            for v in block:
                if v in index:
                    raise ValidationError(f"vertex {v} lies in two blocks", details={"vertex": v})
                index[v] = i
        object.__setattr__(self, "_index", index)

    def __hash__(self):
        return hash(self.blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[Vertex]]) -> "VertexPartition":
        normalized = [tuple(sorted(set(b))) for b in blocks]
        normalized = [b for b in normalized if b]
        normalized.sort()
        return cls(tuple(normalized))

    @classmethod
    def discrete(cls, vertices: Iterable[Vertex]) -> "VertexPartition":
        return cls.of([v] for v in vertices)

    @classmethod
    def from_pairs(cls, vertices: Iterable[Vertex], pairs: Iterable[Tuple[Vertex, Vertex]]) -> "VertexPartition":
        """Equivalence closure of a relation, via union-find"""
        parent: Dict[Vertex, Vertex] = {v: v for v in vertices}

        def find(x: Vertex) -> Vertex:
            root = x
            while parent[root] != root:
                root = parent[root]
            while parent[x] != root:
                parent[x], x = root, parent[x]
            return root

        for a, b in pairs:
            if a not in parent or b not in parent:
                raise ValidationError(f"pair ({a},{b}) leaves the vertex set", details={"pair": [a, b]})
            ra, rb = find(a), find(b)
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

        groups: Dict[Vertex, List[Vertex]] = {}
        for v in parent:
            groups.setdefault(find(v), []).append(v)
        return cls.of(groups.values())

    def covers(self, vertices: Iterable[Vertex]) -> bool:
        return set(self._index) == set(vertices)

    def block_of(self, v: Vertex) -> Tuple[Vertex, ...]:
        return self.blocks[self._index[v]]

    def representative(self, v: Vertex) -> Vertex:
        return self.blocks[self._index[v]][0]

    @property
    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)
