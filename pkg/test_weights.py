from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.weights import (
    INFINITY,
    divides,
    format_weight,
    is_weight,
    parse_weight,
    weight_gcd,
    weight_lcm,
)
from src.exceptions import WeightError


def test_parse_weight():
    assert parse_weight(4) == 4
    assert parse_weight("inf") is INFINITY
    assert parse_weight(INFINITY) is INFINITY
    for bad in (0, -2, True, 2.0, "3", None):
        with pytest.raises(WeightError):
            parse_weight(bad)


def test_is_weight_and_format():
    assert is_weight(1) and is_weight(INFINITY)
    assert not is_weight(0) and not is_weight(False)
    assert format_weight(INFINITY) == "inf"
    assert format_weight(7) == 7
    assert str(INFINITY) == "inf"


def test_divisibility_with_infinity():
    assert divides(2, 6)
    assert not divides(4, 6)
    assert divides(3, INFINITY)
    assert divides(INFINITY, INFINITY)
    assert not divides(INFINITY, 5)


def test_gcd_and_lcm():
    assert weight_gcd([4, 6]) == 2
    assert weight_gcd([4, INFINITY]) == 4
    assert weight_gcd([INFINITY, INFINITY]) is INFINITY
    assert weight_gcd([2, 3]) == 1
    assert weight_lcm([4, 6]) == 12
    assert weight_lcm([2, INFINITY]) is INFINITY
    with pytest.raises(WeightError):
        weight_gcd([])
    with pytest.raises(WeightError):
        weight_lcm([])


DOMAIN = list(range(1, 31)) + [INFINITY]

weights = st.one_of(st.integers(min_value=1, max_value=60), st.just(INFINITY))
weight_lists = st.lists(weights, min_size=1, max_size=5)


def test_divides_is_a_partial_order():
    for a in DOMAIN:
        assert divides(a, a)
    for a, b in product(DOMAIN, repeat=2):
        if divides(a, b) and divides(b, a):
            assert a == b
    for a, b, c in product(DOMAIN, repeat=3):
        if divides(a, b) and divides(b, c):
            assert divides(a, c)


def test_gcd_and_lcm_are_meet_and_join():
    for a, b in product(DOMAIN, repeat=2):
        g, m = weight_gcd([a, b]), weight_lcm([a, b])
        for d in DOMAIN:
            assert divides(d, g) == (divides(d, a) and divides(d, b))
            assert divides(m, d) == (divides(a, d) and divides(b, d))


@settings(max_examples=300)
@given(weight_lists, weight_lists)
def test_gcd_and_lcm_laws(xs, ys):
    for combine in (weight_gcd, weight_lcm):
        assert combine(xs) == combine(list(reversed(xs)))
        assert combine([combine(xs), combine(ys)]) == combine(xs + ys)
        assert combine(xs + xs) == combine(xs)
        assert combine([xs[0], xs[0]]) == xs[0]
    assert all(divides(weight_gcd(xs), x) for x in xs)
    assert all(divides(x, weight_lcm(xs)) for x in xs)
