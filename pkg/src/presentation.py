"""
Generalized Coxeter presentations
Complex -> group presentation, canonical relators, F2 abelianization and text exports
(native, GAP, Magma).
"""

import json
import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from src.core.complex import WeightedComplex, least_in_orbit, validate
from src.core.weights import INFINITY
from src.exceptions import PresentationError

logger = logging.getLogger("Presentation")

Generator = str


@dataclass(frozen=True)
class Relator:
    """word^exponent = 1, with the word stored apart from its exponent"""
    word: Tuple[Generator, ...]
    exponent: int

    def __str__(self):
        return format_relator(self, _native_name)


@dataclass(frozen=True)
class GroupPresentation:
    generators: Tuple[Generator, ...]
    relators: Tuple[Relator, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator", {"generators": list(self.generators)})
        known = set(self.generators)
        for r in self.relators:
            stray = [g for g in r.word if g not in known]
            if stray:
                raise PresentationError(f"relator uses unknown generator {stray[0]}",
                                        {"relator": list(r.word)})

    def relator_multiset(self) -> Counter:
        return Counter(self.relators)

    def rename(self, mapping: Mapping[Generator, Generator]) -> "GroupPresentation":
        """Apply a generator bijection; relators are re-normalized"""
        return GroupPresentation(
            tuple(mapping[g] for g in self.generators),
            tuple(normalize_relator([mapping[g] for g in r.word], r.exponent) for r in self.relators),
        )

    def __str__(self):
        return export(self, "native")


def normalize_relator(word: Sequence[Generator], exponent: int) -> Relator:
    """Canonical representative under cyclic rotation and reversal"""
    if not word:
        raise PresentationError("empty relator word")
    if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 1:
        raise PresentationError(f"relator exponent must be a natural number, got {exponent!r}")
    return Relator(least_in_orbit(word), exponent)


def presentation_of(complex_: WeightedComplex) -> GroupPresentation:
    """Squares for vertices, (uv)^m for finite edges, boundary words for cells; inf edges are silent"""
    validate(complex_).raise_if_invalid()
    relators: List[Relator] = [Relator((v,), 2) for v in complex_.vertices]
    relators.extend(normalize_relator(e.key, e.weight) for e in complex_.edges if e.weight is not INFINITY)
    relators.extend(normalize_relator(f.boundary.vertices, f.weight) for f in complex_.cells)
    return GroupPresentation(tuple(complex_.vertices), tuple(relators))


def free_product(p: GroupPresentation, q: GroupPresentation) -> GroupPresentation:
    """Concatenation of presentations on disjoint generator sets"""
    shared = set(p.generators) & set(q.generators)
    if shared:
        raise PresentationError("free product needs disjoint generators", {"shared": sorted(shared)})
    return GroupPresentation(p.generators + q.generators, p.relators + q.relators)


def gf2_rank(matrix: np.ndarray) -> int:
    """Compute rank over GF(2) using row reduction."""
    mat = np.array(matrix, dtype=np.uint8) % 2
    m, n = mat.shape
    rank = 0
    row = 0
    for col in range(n):
        if row == m:
            break
        pivots = np.nonzero(mat[row:, col])[0]
        if pivots.size == 0:
            continue
        pivot = row + int(pivots[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        for r in range(m):
            if r != row and mat[r, col] == 1:
                mat[r, :] ^= mat[row, :]
        rank += 1
        row += 1
    return rank


def require_involutions(p: GroupPresentation) -> None:
    """Every generator must carry its square relator"""
    squared = {r.word[0] for r in p.relators if len(r.word) == 1 and r.exponent == 2}
    missing = [g for g in p.generators if g not in squared]
    if missing:
        raise PresentationError(f"generator {missing[0]} has no square relator", {"missing": missing})


def abelianization_rank(p: GroupPresentation) -> int:
    """d with G^ab = (Z2)^d"""
    require_involutions(p)

    index = {g: i for i, g in enumerate(p.generators)}
    n = len(p.generators)
    rows = np.zeros((0, n), dtype=np.uint8)
    odd = [r for r in p.relators if r.exponent % 2 == 1]
    if odd:
        rows = np.zeros((len(odd), n), dtype=np.uint8)
        for i, r in enumerate(odd):
            for g in r.word:
                rows[i, index[g]] ^= 1
    rank = gf2_rank(rows) if n else 0
    logger.debug(f"Abelianization: {n} generators, {len(odd)} odd relators, rank {rank}")
    return n - rank


# export

_PLAIN_NAME = re.compile(r'^[^\s,*^()"]+$')

GAP_RESERVED = frozenset("""
and atomic break continue do elif else end false fi for function if in local mod not od or quit
readonly readwrite rec repeat return then true until while F G
""".split())

MAGMA_RESERVED = frozenset("""
and assert by case cat catch continue declare default delete diff div do elif else end eq error eval
exists exit false for forall forward fprintf freeze function ge gt if iload import in intrinsic is join
le local lt meet mod ne not notadj notin notsubset or print printf procedure quit random read readi
repeat require requirege requirerange restore return save sdiff select subset then time to true try
until vprint vprintf when where while xor quo sub F G
""".split())


def _native_name(g: Generator) -> str:
    return g if _PLAIN_NAME.match(g) else json.dumps(g)


def sanitize_identifiers(generators: Sequence[Generator], reserved: frozenset) -> Dict[Generator, str]:
    """
    Deterministic rename into [A-Za-z][A-Za-z0-9_]*.

    Each disallowed character c becomes _<hex code of c>_, a name not starting with a
    letter gets the prefix g_, a reserved word gets a trailing underscore and remaining
    collisions get _2, _3, ... in generator order.
    """
    names: Dict[Generator, str] = {}
    used = set()
    for g in generators:
        name = "".join(c if (c.isascii() and (c.isalnum() or c == "_")) else f"_{ord(c):x}_" for c in g)
        if not name or not name[0].isalpha():
            name = "g_" + name
        if name in reserved:
            name += "_"
        candidate, k = name, 2
        while candidate in used:
            candidate = f"{name}_{k}"
            k += 1
        used.add(candidate)
        names[g] = candidate
    return names


def format_relator(r: Relator, name=lambda g: g) -> str:
    if len(r.word) == 1:
        return f"{name(r.word[0])}^{r.exponent}"
    return "(" + "*".join(name(g) for g in r.word) + f")^{r.exponent}"


def _export_native(p: GroupPresentation) -> str:
    gens = ", ".join(_native_name(g) for g in p.generators)
    lines = [f"gens: {gens}" if gens else "gens:"]
    lines.extend(f"rel: {format_relator(r, _native_name)}" for r in p.relators)
    return "\n".join(lines)


def _export_gap(p: GroupPresentation) -> str:
    names = sanitize_identifiers(p.generators, GAP_RESERVED)
    quoted = ", ".join(f'"{names[g]}"' for g in p.generators)
    lines = [f"F := FreeGroup({quoted});;" if quoted else "F := FreeGroup(0);;"]
    lines.extend(f"{names[g]} := F.{i};;" for i, g in enumerate(p.generators, start=1))
    rels = ", ".join(format_relator(r, names.get) for r in p.relators)
    lines.append(f"G := F / [ {rels} ];;" if rels else "G := F / [ ];;")
    return "\n".join(lines)


def _export_magma(p: GroupPresentation) -> str:
    names = sanitize_identifiers(p.generators, MAGMA_RESERVED)
    gens = ",".join(names[g] for g in p.generators)
    lines = [f"F<{gens}> := FreeGroup({len(p.generators)});" if gens else "F := FreeGroup(0);"]
    rels = ", ".join(format_relator(r, names.get) for r in p.relators)
    lines.append(f"G := quo< F | {rels} >;" if rels else "G := F;")
    return "\n".join(lines)


EXPORT_FORMATS = {
    "native": _export_native,
    "gap": _export_gap,
    "magma": _export_magma,
}


def export(p: GroupPresentation, format: str = "native") -> str:
    try:
        emit = EXPORT_FORMATS[format]
    except KeyError:
        raise PresentationError(f"unknown export format {format}", {"formats": sorted(EXPORT_FORMATS)})
    return emit(p)


_TOKEN = re.compile(r'\s*("(?:[^"\\]|\\.)*"|[,*^()]|[^\s,*^()"]+)')


def _tokens(text: str, lineno: int) -> List[str]:
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise PresentationError(f"unexpected character at line {lineno}", {"line": lineno, "column": pos + 1})
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def _name(token: str, lineno: int) -> Generator:
    if token.startswith('"'):
        return json.loads(token)
    if token in ",*^()":
        raise PresentationError(f"expected a generator at line {lineno}, got {token!r}", {"line": lineno})
    return token


def _parse_relator(tokens: List[str], lineno: int) -> Relator:
    if len(tokens) >= 2 and tokens[-2] == "^" and tokens[-1].isdigit():
        body, exponent = tokens[:-2], int(tokens[-1])
    else:
        raise PresentationError(f"relator must end in ^<exponent> at line {lineno}", {"line": lineno})
    if len(body) == 1:
        word = [_name(body[0], lineno)]
    elif len(body) >= 3 and body[0] == "(" and body[-1] == ")":
        inner = body[1:-1]
        if len(inner) % 2 == 0 or any(t != "*" for t in inner[1::2]):
            raise PresentationError(f"malformed product at line {lineno}", {"line": lineno})
        word = [_name(t, lineno) for t in inner[0::2]]
    else:
        raise PresentationError(f"malformed relator at line {lineno}", {"line": lineno})
    return normalize_relator(word, exponent)


def parse_native(text: str) -> GroupPresentation:
    """Inverse of the native export"""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or not lines[0].startswith("gens:"):
        raise PresentationError("native presentation must start with 'gens:'", {"line": 1})

    header = _tokens(lines[0][len("gens:"):], 1)
    generators = [_name(t, 1) for t in header[0::2]]
    if any(t != "," for t in header[1::2]) or (header and len(header) % 2 == 0):
        raise PresentationError("generators must be separated by commas", {"line": 1})

    relators = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.startswith("rel:"):
            raise PresentationError(f"expected 'rel:' at line {lineno}", {"line": lineno})
        relators.append(_parse_relator(_tokens(line[len("rel:"):], lineno), lineno))
    return GroupPresentation(tuple(generators), tuple(relators))
