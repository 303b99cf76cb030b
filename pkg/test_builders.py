import json

import pytest

from src.builders import (
    FAMILIES,
    FamilySpec,
    build_family,
    complete2,
    coxeter,
    coxeter_matrix_of,
    dihedral,
    discrete,
    gnk,
    gvp,
    numbered_vertices,
    parse_family,
    subset_vertex,
    sympath,
)
from src.core.complex import validate
from src.core.weights import INFINITY
from src.exceptions import FamilyError


def test_numbered_vertices_sort_numerically():
    names = numbered_vertices(12)
    assert names[0] == "v01" and names[-1] == "v12"
    assert names == sorted(names)
    assert subset_vertex((3, 1)) == "s1_3"


def test_small_families():
    assert discrete(3).vertices == ("v1", "v2", "v3")
    assert not discrete(3).edges
    assert len(complete2(4).edges) == 6
    assert dihedral(5).edge("u", "v").weight == 5
    assert dihedral("inf").edge("u", "v").weight is INFINITY
    d = sympath(3)
    assert d.edge("v1", "v2").weight == 3
    assert d.edge("v1", "v3").weight == 2


def test_path_matrix_coxeter_equals_sympath():
    n = 4
    matrix = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    assert coxeter(matrix) == sympath(n)
    assert coxeter_matrix_of(sympath(n)) == matrix


def test_coxeter_matrix_with_infinity():
    c = coxeter([[1, "inf"], ["inf", 1]])
    assert c == build_family(["coxeter", '[[1,"inf"],["inf",1]]'])
    assert coxeter_matrix_of(c) == [[1, INFINITY], [INFINITY, 1]]
    assert coxeter_matrix_of(discrete(2)) == [[1, INFINITY], [INFINITY, 1]]


@pytest.mark.parametrize("matrix", [
    [[1, 2], [3, 1]],
    [[2, 2], [2, 1]],
    [[1, 1], [1, 1]],
    [[1, 2, 2], [2, 1]],
    [[1, 0], [0, 1]],
])
def test_bad_coxeter_matrices(matrix):
    with pytest.raises(FamilyError):
        coxeter(matrix)


def test_coxeter_matrix_of_refuses_cells(triangle):
    with pytest.raises(FamilyError):
        coxeter_matrix_of(triangle)


def test_gnk_4_2_counts():
    c = gnk(4, 2)
    assert len(c.vertices) == 6
    assert sum(1 for e in c.edges if e.weight == 2) == 3
    assert sum(1 for e in c.edges if e.weight is INFINITY) == 12
    assert len(c.cells) == 4


def test_gnk_4_3_counts():
    c = gnk(4, 3)
    assert len(c.vertices) == 4
    assert all(e.weight is INFINITY for e in c.edges) and len(c.edges) == 6
    # 3!/2 orderings of the four faces of {1,2,3,4}
    assert len(c.cells) == 3
    assert all(len(f.boundary.vertices) == 4 and f.weight == 2 for f in c.cells)


def test_gvp_shape():
    c = gvp(4)
    assert len(c.vertices) == 6
    assert c.edge("s1_2", "s3_4").weight == 2
    assert c.edge("s1_2", "s1_3").weight is INFINITY
    assert len(c.cells) == 4
    assert gvp(3) == gnk(3, 2)


@pytest.mark.parametrize("spec", [
    "empty", "point", "discrete 0", "discrete 3", "complete2 3", "sympath 4", "dihedral 2", "dihedral inf",
    "gvp 2", "gvp 5", "gnk 3 2", "gnk 5 2", "gnk 5 3", "gnk 5 4",
])
def test_every_family_is_valid(spec):
    assert validate(build_family(spec)).ok


@pytest.mark.parametrize("tokens", [
    [], ["nonsense"], ["dihedral"], ["dihedral", "1"], ["dihedral", "x"], ["gnk", "4", "4"], ["gnk", "4", "1"],
    ["gvp", "1"], ["sympath", "0"], ["discrete", "-1"], ["coxeter", "[[1,"], ["coxeter", "/no/such/file.json"],
    ["coxeter", "[1, 2]"], ["empty", "3"],
])
def test_bad_family_requests(tokens):
    with pytest.raises(FamilyError):
        build_family(parse_family(tokens))


def test_parse_family():
    assert parse_family(["gnk", "4", "2"]) == FamilySpec("gnk", (4, 2))
    assert parse_family(["dihedral", "inf"]) == FamilySpec("dihedral", ("inf",))
    assert str(FamilySpec("coxeter", ([[1, 2], [2, 1]],))) == "coxeter [[1, 2], [2, 1]]"
    assert set(FAMILIES) == {"empty", "point", "discrete", "complete2", "coxeter", "sympath", "dihedral", "gvp", "gnk"}


def test_coxeter_matrix_from_file(tmp_path):
    path = tmp_path / "b3.json"
    path.write_text(json.dumps([[1, 4, 2], [4, 1, 3], [2, 3, 1]]))
    c = build_family(["coxeter", str(path)])
    assert c.edge("v1", "v2").weight == 4
