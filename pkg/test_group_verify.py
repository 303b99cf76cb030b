import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complexes, pick
from src.builders import complete2, dihedral, point, sympath
from src.coset_table import coset_enumerate
from src.exceptions import PresentationError
from src.group_verify import induced_generator_map, verify_homomorphism, vertex_generator_map
from src.morphism import extend_from_vertex_map, morphisms_between
from src.presentation import presentation_of


def _table(c):
    return coset_enumerate(presentation_of(c)).require_table()


def test_d6_to_d3_is_a_homomorphism():
    m = extend_from_vertex_map(dihedral(6), dihedral(3), {"u": "u", "v": "v"})
    genmap = induced_generator_map(m)
    assert genmap == {"u": ("u",), "v": ("v",)}
    assert verify_homomorphism(genmap, presentation_of(dihedral(6)), _table(dihedral(3)))


def test_d3_to_d4_is_not():
    source_p, target_p = presentation_of(dihedral(3)), presentation_of(dihedral(4))
    genmap = vertex_generator_map({"u": "u", "v": "v"}, source_p, target_p)
    assert not verify_homomorphism(genmap, source_p, _table(dihedral(4)))


def test_longer_words_as_images():
    # u -> (1 2), v -> (2 4) in S4; their product has order 3
    genmap = {"u": ("v1",), "v": ("v2", "v3", "v2")}
    assert not verify_homomorphism(genmap, presentation_of(dihedral(2)), _table(sympath(3)))
    assert verify_homomorphism(genmap, presentation_of(dihedral(3)), _table(sympath(3)))


def test_generator_map_errors():
    source_p, target_p = presentation_of(dihedral(3)), presentation_of(dihedral(4))
    with pytest.raises(PresentationError):
        verify_homomorphism({"u": ("u",)}, source_p, _table(dihedral(4)))
    with pytest.raises(PresentationError):
        vertex_generator_map({"u": "u", "v": "w"}, source_p, target_p)
    with pytest.raises(PresentationError):
        vertex_generator_map({"u": "u", "v": "v", "z": "u"}, source_p, target_p)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_graph_morphisms_induce_homomorphisms(data):
    source = data.draw(complexes(max_vertices=3, with_cells=False))
    target = data.draw(st.sampled_from([dihedral(3), dihedral(4), sympath(2), complete2(3)]))
    m = pick(data.draw, morphisms_between(source, target))
    if m is None:
        return
    assert verify_homomorphism(induced_generator_map(m), presentation_of(source), _table(target))


def test_collapsed_odd_cell_breaks_the_induced_map(triangle):
    # (abc)^3 goes to v^9 = v
    m = extend_from_vertex_map(triangle, point(), {v: "v" for v in triangle.vertices})
    assert not verify_homomorphism(induced_generator_map(m), presentation_of(triangle), _table(point()))
