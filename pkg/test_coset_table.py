from math import factorial

import pytest
from hypothesis import given, settings
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from conftest import complexes
from src.builders import complete2, coxeter, dihedral, discrete, point, sympath
from src.core.complex import empty_complex
from src.coset_table import (
    CosetTable,
    Verdict,
    coset_enumerate,
    multiplication_action,
    permutation_closure_order,
)
from src.exceptions import CosetLimitExceeded, IncompleteTableError, PresentationError
from src.presentation import GroupPresentation, parse_native, presentation_of


def _order(c, limit=None):
    return coset_enumerate(presentation_of(c), limit).require_order()


def _sympy_permutation_order(table: CosetTable) -> int:
    perms = [Permutation([x - 1 for x in table.permutation(g)]) for g in table.generators]
    return PermutationGroup(perms).order()


def _sympy_fp_order(p: GroupPresentation) -> int:
    F, *letters = free_group(",".join(p.generators))
    index = dict(zip(p.generators, letters))
    relators = []
    for r in p.relators:
        word = F.identity
        for g in r.word:
            word = word * index[g]
        relators.append(word ** r.exponent)
    return FpGroup(F, relators).order()


@pytest.mark.parametrize("n", range(2, 9))
def test_dihedral_orders(n):
    assert _order(dihedral(n)) == 2 * n


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_orders(n):
    assert _order(sympath(n)) == factorial(n + 1)


@pytest.mark.parametrize("r", range(1, 7))
def test_direct_product_orders(r):
    assert _order(complete2(r)) == 2 ** r


def test_degenerate_orders():
    assert _order(empty_complex()) == 1
    assert _order(point()) == 2


def test_coxeter_b3_order():
    # hyperoctahedral group of rank 3
    assert _order(coxeter([[1, 4, 2], [4, 1, 3], [2, 3, 1]])) == 48


def test_infinite_groups_exceed_the_limit():
    result = coset_enumerate(presentation_of(discrete(2)), 1000)
    assert result.verdict is Verdict.EXCEEDED
    assert str(result) == "exceeded(1000)"
    assert result.table is None
    with pytest.raises(CosetLimitExceeded) as info:
        result.require_order()
    assert info.value.code == "exceeded"
    assert str(info.value).startswith("exceeded(1000)")
    with pytest.raises(IncompleteTableError):
        result.require_table()
    assert not coset_enumerate(presentation_of(dihedral("inf")), 500).complete


def test_limit_must_be_positive():
    with pytest.raises(PresentationError):
        coset_enumerate(presentation_of(point()), 0)


@pytest.mark.parametrize("text", ["gens: u", "gens: u\nrel: u^3", "gens: u, v\nrel: u^2\nrel: (u*v)^3"])
def test_generators_must_be_involutions(text):
    with pytest.raises(PresentationError) as info:
        coset_enumerate(parse_native(text), 1000)
    assert "square relator" in str(info.value)


def test_stats_are_reported():
    result = coset_enumerate(presentation_of(dihedral(5)))
    assert result.complete
    assert str(result) == "10"
    stats = result.stats.to_dict()
    assert stats["max_live"] >= 10
    assert stats["defined"] >= stats["max_live"]


def test_table_shape_and_action():
    table = coset_enumerate(presentation_of(dihedral(4))).require_table()
    assert table.order == 8
    assert table.complete
    assert table.is_consistent()
    # breadth-first numbering from the identity coset
    assert table.act(1, ["u"]) == 2
    assert all(table.act(c, ["u", "u"]) == c for c in range(1, 9))
    assert table.stabilizes_all(["u", "v"] * 4)
    assert not table.stabilizes_all(["u", "v"] * 2)
    assert sorted(table.permutation("v")) == list(range(1, 9))


def test_multiplication_action():
    result = coset_enumerate(presentation_of(dihedral(3)))
    assert multiplication_action(result, ["u", "v"] * 3).is_identity
    action = multiplication_action(result, ["u", "v"])
    assert not action.is_identity
    assert action.image == action.permutation[0]


def test_table_errors():
    incomplete = CosetTable(("u",), ((0,),))
    assert not incomplete.complete
    assert not incomplete.is_consistent()
    with pytest.raises(IncompleteTableError):
        incomplete.act(1, ["u"])
    table = coset_enumerate(presentation_of(point())).require_table()
    with pytest.raises(PresentationError):
        table.column("w")


@pytest.mark.parametrize("complex_", [
    dihedral(6), sympath(3), sympath(5), complete2(4), coxeter([[1, 3, 2], [3, 1, 3], [2, 3, 1]]),
], ids=["dihedral6", "sympath3", "sympath5", "complete2_4", "a3"])
def test_closure_oracle_agrees(complex_):
    table = coset_enumerate(presentation_of(complex_)).require_table()
    assert permutation_closure_order(table) == table.order
    assert _sympy_permutation_order(table) == table.order


def test_closure_cap():
    table = coset_enumerate(presentation_of(dihedral(8))).require_table()
    with pytest.raises(CosetLimitExceeded):
        permutation_closure_order(table, cap=5)


@pytest.mark.parametrize("complex_, order", [
    (dihedral(5), 10), (sympath(2), 6), (complete2(3), 8),
])
def test_sympy_finitely_presented_order(complex_, order):
    p = presentation_of(complex_)
    assert _sympy_fp_order(p) == order == _order(complex_)


@settings(max_examples=40, deadline=None)
@given(complexes())
def test_random_orders_agree_with_oracles(c):
    result = coset_enumerate(presentation_of(c), 2000)
    if not result.complete:
        return
    table = result.require_table()
    assert table.is_consistent()
    assert permutation_closure_order(table, cap=5040) == result.order
    if table.generators:
        assert _sympy_permutation_order(table) == result.order
