import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes, pick
from src.builders import dihedral
from src.core.complex import Cycle, WeightedComplex, empty_complex, point_complex
from src.core.weights import INFINITY
from src.exceptions import CompositionError, HomSetLimitExceeded, MorphismError
from src.morphism import (
    ImageKind,
    check_diagrams,
    collapse_walk,
    compose,
    extend_from_vertex_map,
    identity,
    morphisms_between,
    skeleton_inclusion,
)


def test_collapse_walk():
    assert collapse_walk(["a", "a", "b", "c", "c"]) == ("a", "b", "c")
    assert collapse_walk(["a", "b", "a"]) == ("a", "b")
    assert collapse_walk(["x", "x", "x"]) == ("x",)


def test_extension_requires_divisibility():
    with pytest.raises(MorphismError, match="3 not divisible by 6"):
        extend_from_vertex_map(dihedral(3), dihedral(6), {"u": "u", "v": "v"})
    m = extend_from_vertex_map(dihedral(6), dihedral(3), {"u": "u", "v": "v"})
    assert m.image_of_edge("u", "v").kind is ImageKind.EDGE


def test_only_infinite_edges_map_onto_infinite_edges():
    with pytest.raises(MorphismError, match="2 not divisible by inf"):
        extend_from_vertex_map(dihedral(2), dihedral("inf"), {"u": "u", "v": "v"})
    assert extend_from_vertex_map(dihedral("inf"), dihedral(2), {"u": "u", "v": "v"})
    collapsed = extend_from_vertex_map(dihedral("inf"), point_complex(), {"u": "v", "v": "v"})
    assert collapsed.image_of_edge("u", "v").kind is ImageKind.VERTEX


def test_extension_errors():
    two = WeightedComplex.build(["a", "b"])
    with pytest.raises(MorphismError, match="not total"):
        extend_from_vertex_map(two, two, {"a": "a"})
    with pytest.raises(MorphismError, match="non-source"):
        extend_from_vertex_map(two, two, {"a": "a", "b": "b", "z": "a"})
    with pytest.raises(MorphismError, match="not a target vertex"):
        extend_from_vertex_map(two, two, {"a": "a", "b": "q"})
    with pytest.raises(MorphismError, match="missing target edge"):
        extend_from_vertex_map(dihedral(2), two, {"u": "a", "v": "b"})


def test_cell_images(triangle):
    other = WeightedComplex.build(
        ["x", "y", "z"],
        [("x", "y", 2), ("y", "z", 3), ("x", "z", 3)],
        [(["x", "y", "z"], 3)],
    )
    m = extend_from_vertex_map(triangle, other, {"a": "x", "b": "y", "c": "z"})
    assert m.image_of_cell(Cycle(("a", "b", "c"))).key == ("x", "y", "z")
    assert check_diagrams(m) == []

    flat = WeightedComplex.build(["x", "y", "z"], [("x", "y", 2), ("y", "z", 3), ("x", "z", 3)])
    with pytest.raises(MorphismError, match="not a cell boundary"):
        extend_from_vertex_map(triangle, flat, {"a": "x", "b": "y", "c": "z"})

    heavy = WeightedComplex.build(
        ["x", "y", "z"],
        [("x", "y", 2), ("y", "z", 3), ("x", "z", 3)],
        [(["x", "y", "z"], 2)],
    )
    with pytest.raises(MorphismError, match="3 not divisible by 2"):
        extend_from_vertex_map(triangle, heavy, {"a": "x", "b": "y", "c": "z"})


def test_cell_collapsing_to_an_edge_is_not_a_morphism(triangle):
    target = WeightedComplex.build(["x", "y"], [("x", "y", 2)])
    # the boundary folds onto the single edge x-y
    with pytest.raises(MorphismError, match="collapses to length 2"):
        extend_from_vertex_map(triangle, target, {"a": "x", "b": "y", "c": "y"})


def test_cell_collapsing_to_a_vertex(triangle):
    m = extend_from_vertex_map(triangle, point_complex("p"), {"a": "p", "b": "p", "c": "p"})
    assert m.image_of_cell(Cycle(("a", "b", "c"))).kind is ImageKind.VERTEX
    assert check_diagrams(m) == []


def test_identity_and_composition(triangle):
    ident = identity(triangle)
    point = extend_from_vertex_map(triangle, point_complex(), {v: "v" for v in triangle.vertices})
    assert compose(point, ident) == point
    with pytest.raises(CompositionError):
        compose(ident, point)


def test_skeleton_inclusion(triangle):
    inc = skeleton_inclusion(triangle)
    assert not inc.source.cells
    assert inc.target == triangle
    assert check_diagrams(inc) == []


def test_hom_set_counts():
    assert len(morphisms_between(empty_complex(), dihedral(3))) == 1
    assert morphisms_between(point_complex(), empty_complex()) == []
    # u, v each go to u or v; the edge needs 4 | 2 when it does not collapse
    assert len(morphisms_between(dihedral(2), dihedral(4))) == 2
    assert len(morphisms_between(dihedral(4), dihedral(2))) == 4


def test_hom_set_limit():
    with pytest.raises(HomSetLimitExceeded):
        morphisms_between(WeightedComplex.build(["a", "b", "c"]), dihedral(INFINITY), limit=7)


def test_hom_set_limit_comes_from_config(monkeypatch):
    pair = WeightedComplex.build(["a", "b"])
    monkeypatch.setenv("GCX_HOM_LIMIT", "3")
    with pytest.raises(HomSetLimitExceeded) as info:
        morphisms_between(pair, dihedral(2))
    assert info.value.details == {"maps": 4, "limit": 3}
    assert len(morphisms_between(pair, dihedral(2), limit=4)) == 4
    monkeypatch.setenv("GCX_HOM_LIMIT", "4")
    assert len(morphisms_between(pair, dihedral(2))) == 4


def test_image_of_vertex_edge_cell(triangle):
    m = identity(triangle)
    assert str(m.image_of("a")) == "a"
    assert str(m.image_of(triangle.edges[0])) == "{a,b}"
    assert str(m.image_of(triangle.cells[0])) == "(a,b,c)"
    assert str(m) == "Morphism(a->a, b->b, c->c)"


@settings(max_examples=200, deadline=None)
@given(complexes(max_vertices=3), complexes(max_vertices=3))
def test_vertex_maps_determine_morphisms(source, target):
    found = morphisms_between(source, target)
    vertex_maps = [m.vertex_map for m in found]
    assert len(vertex_maps) == len(set(vertex_maps))
    for m in found:
        assert check_diagrams(m) == []


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_composition_is_associative_and_unital(data):
    a, b, c, d = (data.draw(complexes(max_vertices=3)) for _ in range(4))
    f = pick(data.draw, morphisms_between(a, b))
    g = pick(data.draw, morphisms_between(b, c))
    h = pick(data.draw, morphisms_between(c, d))
    if f is not None:
        assert compose(identity(b), f) == f
        assert compose(f, identity(a)) == f
    if f is not None and g is not None and h is not None:
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)
        assert check_diagrams(compose(h, compose(g, f))) == []
