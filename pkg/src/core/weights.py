"""
Weights of a weighted 2-complex: natural numbers plus an infinite top element.

Infinity is divisible by every natural number and by itself, and divides only itself.
"""

import math
from enum import Enum
from typing import Iterable, Union

from src.exceptions import WeightError


class Infinity(Enum):
    """The infinite weight (top of the divisibility lattice)"""
    INFINITY = "inf"

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = Infinity.INFINITY

Weight = Union[int, Infinity]


def is_weight(value) -> bool:
    if value is INFINITY:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def parse_weight(raw) -> Weight:
    """Accept an int >= 1 or the string "inf"."""
    if raw is INFINITY or raw == "inf":
        return INFINITY
    if isinstance(raw, int) and not isinstance(raw, bool) and raw >= 1:
        return raw
    raise WeightError(f"not a weight: {raw!r}")


def format_weight(weight: Weight):
    """JSON-friendly form: the int itself or "inf"."""
    return "inf" if weight is INFINITY else weight


def divides(d: Weight, m: Weight) -> bool:
    """True iff m is divisible by d."""
    if m is INFINITY:
        return True
    if d is INFINITY:
        return False
    return m % d == 0


def weight_gcd(weights: Iterable[Weight]) -> Weight:
    """Meet in the divisibility lattice; infinity is ignored unless it is all there is."""
    ws = list(weights)
    if not ws:
        raise WeightError("gcd of an empty set of weights")
    finite = [w for w in ws if w is not INFINITY]
    if not finite:
        return INFINITY
    return math.gcd(*finite)


def weight_lcm(weights: Iterable[Weight]) -> Weight:
    """Join in the divisibility lattice; any infinity absorbs."""
    ws = list(weights)
    if not ws:
        raise WeightError("lcm of an empty set of weights")
    if any(w is INFINITY for w in ws):
        return INFINITY
    return math.lcm(*ws)
