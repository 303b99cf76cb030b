"""
Shared fixtures and hypothesis strategies: random small weighted 2-complexes,
vertex partitions and picks from enumerated Hom-sets.
"""

from itertools import combinations

import pytest
from hypothesis import strategies as st

from src.core.complex import VertexPartition, WeightedComplex
from src.core.weights import INFINITY

VERTEX_POOL = ("a", "b", "c", "d")
EDGE_WEIGHTS = (2, 3, 4, 6, INFINITY)
CELL_WEIGHTS = (2, 3, 4)


@st.composite
def complexes(draw, max_vertices: int = 4, with_cells: bool = True, min_vertices: int = 0):
    """Valid complex on a prefix of VERTEX_POOL; cells are triangles over existing edges"""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    vertices = VERTEX_POOL[:n]
    edges = []
    for u, v in combinations(vertices, 2):
        weight = draw(st.one_of(st.none(), st.sampled_from(EDGE_WEIGHTS)))
        if weight is not None:
            edges.append((u, v, weight))
    present = {(u, v) for u, v, _ in edges}
    cells = []
    if with_cells:
        for tri in combinations(vertices, 3):
            if all(pair in present for pair in combinations(tri, 2)) and draw(st.booleans()):
                order = draw(st.permutations(tri))
                cells.append((list(order), draw(st.sampled_from(CELL_WEIGHTS))))
    return WeightedComplex.build(vertices, edges, cells)


@st.composite
def partitions(draw, vertices):
    """Random partition of ``vertices`` given as block labels"""
    labels = [draw(st.integers(min_value=0, max_value=max(len(vertices) - 1, 0))) for _ in vertices]
    blocks = {}
    for v, label in zip(vertices, labels):
        blocks.setdefault(label, []).append(v)
    return VertexPartition.of(blocks.values())


def pick(draw, items):
    """Draw one element of a non-empty list, or None for an empty one"""
    if not items:
        return None
    return items[draw(st.integers(min_value=0, max_value=len(items) - 1))]


@pytest.fixture
def triangle():
    """Triangle with one weight-3 cell"""
    return WeightedComplex.build(
        ["a", "b", "c"],
        [("a", "b", 2), ("b", "c", 3), ("a", "c", 6)],
        [(["a", "b", "c"], 3)],
    )


@pytest.fixture
def square_with_cell():
    return WeightedComplex.build(
        ["a", "b", "c", "d"],
        [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)],
        [(["a", "b", "c", "d"], 2)],
    )
