"""
Family builders
Complexes whose generalized Coxeter groups are the classical examples: free and direct
products of Z2, dihedral and symmetric groups, Coxeter systems, GVP_n and G_n^k.
"""

import json
import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Tuple, Union

from src.core.complex import Vertex, WeightedComplex, cycle_canonicalize, empty_complex, point_complex
from src.core.weights import INFINITY, Weight, parse_weight
from src.exceptions import FamilyError, WeightError

logger = logging.getLogger("Builders")

CoxeterMatrix = List[List[Weight]]


def numbered_vertices(r: int) -> List[Vertex]:
    """v1..vr, zero-padded so that string order is numeric order"""
    width = len(str(r)) if r > 0 else 1
    return [f"v{i:0{width}d}" for i in range(1, r + 1)]


def subset_vertex(indices: Sequence[int]) -> Vertex:
    return "s" + "_".join(str(i) for i in sorted(indices))


def _require_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise FamilyError(f"{name} needs an integer >= {minimum}, got {value!r}")
    return value


def empty() -> WeightedComplex:
    return empty_complex()


def point() -> WeightedComplex:
    return point_complex("v")


def discrete(r: int) -> WeightedComplex:
    """Free product of r copies of Z2"""
    return WeightedComplex.build(numbered_vertices(_require_int("discrete", r, 0)))


def complete2(r: int) -> WeightedComplex:
    """Direct product of r copies of Z2"""
    vs = numbered_vertices(_require_int("complete2", r, 0))
    return WeightedComplex.build(vs, [(a, b, 2) for a, b in combinations(vs, 2)])


def dihedral(n: Union[int, str]) -> WeightedComplex:
    """Two vertices joined by one edge of weight n (n = inf gives the infinite dihedral group)"""
    if n == "inf" or n is INFINITY:
        weight = INFINITY
    else:
        weight = _require_int("dihedral", n, 2)
    return WeightedComplex.build(["u", "v"], [("u", "v", weight)])


def sympath(n: int) -> WeightedComplex:
    """Weight 3 on consecutive vertices, 2 otherwise: the symmetric group on n+1 letters"""
    vs = numbered_vertices(_require_int("sympath", n, 1))
    return WeightedComplex.build(vs, [(vs[i], vs[j], 3 if j == i + 1 else 2)
                                      for i, j in combinations(range(n), 2)])


def validate_coxeter_matrix(matrix: Sequence[Sequence]) -> CoxeterMatrix:
    n = len(matrix)
    rows: CoxeterMatrix = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise FamilyError(f"coxeter matrix row {i + 1} has {len(row)} entries, expected {n}")
        try:
            rows.append([parse_weight(x) for x in row])
        except WeightError as e:
            raise FamilyError(f"coxeter matrix row {i + 1}: {e.message}")
    for i in range(n):
        if rows[i][i] != 1:
            raise FamilyError(f"coxeter matrix diagonal entry {i + 1} must be 1")
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise FamilyError(f"coxeter matrix is not symmetric at ({i + 1},{j + 1})")
            if rows[i][j] == 1:
                raise FamilyError(f"coxeter matrix off-diagonal entry ({i + 1},{j + 1}) must be >= 2 or inf")
    return rows


def coxeter(matrix: Sequence[Sequence]) -> WeightedComplex:
    """Coxeter system: every pair of generators joined, inf entries included"""
    rows = validate_coxeter_matrix(matrix)
    vs = numbered_vertices(len(rows))
    return WeightedComplex.build(vs, [(vs[i], vs[j], rows[i][j]) for i, j in combinations(range(len(vs)), 2)])


def coxeter_matrix_of(graph: WeightedComplex) -> CoxeterMatrix:
    """Coxeter matrix on the vertex order; a missing edge reads as inf"""
    if graph.cells:
        raise FamilyError("coxeter matrix needs a weighted graph (complex has 2-cells)",
                          {"cells": len(graph.cells)})
    vs = graph.vertices
    matrix: CoxeterMatrix = []
    for a in vs:
        row: List[Weight] = []
        for b in vs:
            edge = graph.edge(a, b)
            row.append(1 if a == b else (edge.weight if edge is not None else INFINITY))
        matrix.append(row)
    return matrix


def gvp(n: int) -> WeightedComplex:
    """
    Pure Gauss virtual braids: one vertex per pair i<j, weight 2 between disjoint pairs,
    inf between pairs sharing an index, one weight-2 triangle per 3-subset.
    """
    _require_int("gvp", n, 2)
    pairs = list(combinations(range(1, n + 1), 2))
    edges = []
    for p, q in combinations(pairs, 2):
        edges.append((subset_vertex(p), subset_vertex(q), 2 if not set(p) & set(q) else INFINITY))
    cells = [([subset_vertex((i, j)), subset_vertex((i, k)), subset_vertex((j, k))], 2)
             for i, j, k in combinations(range(1, n + 1), 3)]
    return WeightedComplex.build([subset_vertex(p) for p in pairs], edges, cells)


def gnk(n: int, k: int) -> WeightedComplex:
    """
    k-free braids on n strands: one vertex per k-subset, weight 2 when two subsets meet in
    fewer than k-1 indices, inf when they meet in exactly k-1; for every (k+1)-subset,
    one weight-2 cell per cyclic ordering (up to reversal) of its k-subsets.
    """
    _require_int("gnk", n, 3)
    _require_int("gnk", k, 2)
    if k >= n:
        raise FamilyError(f"gnk needs 2 <= k < n, got n={n}, k={k}")
    subsets = list(combinations(range(1, n + 1), k))
    edges = []
    for p, q in combinations(subsets, 2):
        edges.append((subset_vertex(p), subset_vertex(q), INFINITY if len(set(p) & set(q)) == k - 1 else 2))
    boundaries = set()
    for u in combinations(range(1, n + 1), k + 1):
        faces = [subset_vertex(f) for f in combinations(u, k)]
        first, rest = faces[0], faces[1:]
        for order in permutations(rest):
            boundaries.add(cycle_canonicalize((first,) + order).vertices)
    cells = [(b, 2) for b in sorted(boundaries)]
    return WeightedComplex.build([subset_vertex(s) for s in subsets], edges, cells)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Tuple = ()

    def __str__(self):
        return " ".join([self.name, *(json.dumps(p) if isinstance(p, list) else str(p) for p in self.params)])


FAMILIES: Dict[str, Tuple[Callable[..., WeightedComplex], int]] = {
    "empty": (empty, 0),
    "point": (point, 0),
    "discrete": (discrete, 1),
    "complete2": (complete2, 1),
    "coxeter": (coxeter, 1),
    "sympath": (sympath, 1),
    "dihedral": (dihedral, 1),
    "gvp": (gvp, 1),
    "gnk": (gnk, 2),
}


def _parse_int(name: str, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FamilyError(f"{name} parameter must be an integer, got {token!r}")


def _parse_matrix(token: str) -> list:
    text = token
    if not token.lstrip().startswith("["):
        try:
            text = Path(token).read_text()
        except OSError as e:
            raise FamilyError(f"cannot read coxeter matrix file {token}: {e.strerror}")
    try:
        matrix = json.loads(text)
    except json.JSONDecodeError as e:
        raise FamilyError(f"coxeter matrix is not JSON: {e.msg}", {"line": e.lineno, "column": e.colno})
    if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
        raise FamilyError("coxeter matrix must be a list of rows")
    return matrix


def parse_family(tokens: Sequence[str]) -> FamilySpec:
    """CLI family syntax: ``dihedral 4``, ``dihedral inf``, ``gnk 4 2``, ``coxeter FILE_OR_JSON``"""
    if not tokens:
        raise FamilyError("missing family name", {"families": sorted(FAMILIES)})
    name, args = tokens[0], list(tokens[1:])
    if name not in FAMILIES:
        raise FamilyError(f"unknown family {name}", {"families": sorted(FAMILIES)})
    arity = FAMILIES[name][1]
    if len(args) != arity:
        raise FamilyError(f"{name} takes {arity} parameter(s), got {len(args)}")
    if name == "coxeter":
        return FamilySpec(name, (_parse_matrix(args[0]),))
    if name == "dihedral" and args[0] == "inf":
        return FamilySpec(name, ("inf",))
    return FamilySpec(name, tuple(_parse_int(name, a) for a in args))


def build_family(spec: Union[FamilySpec, str, Sequence[str]]) -> WeightedComplex:
    if isinstance(spec, str):
        spec = parse_family(spec.split())
    elif not isinstance(spec, FamilySpec):
        spec = parse_family(list(spec))
    builder, arity = FAMILIES.get(spec.name, (None, 0))
    if builder is None:
        raise FamilyError(f"unknown family {spec.name}", {"families": sorted(FAMILIES)})
    if len(spec.params) != arity:
        raise FamilyError(f"{spec.name} takes {arity} parameter(s), got {len(spec.params)}")
    complex_ = builder(*spec.params)
    logger.debug(f"Built {spec}: {complex_.summary()}")
    return complex_
