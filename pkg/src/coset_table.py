"""
Todd-Coxeter coset enumeration over the trivial subgroup

Every generator of a generalized Coxeter group is an involution, so the table keeps one
column per generator: table[c][g] = d implies table[d][g] = c. Cosets are defined by HLT
relator scanning; coincidences are processed through a union-find queue, the smaller
coset number surviving.
"""

import logging
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.exceptions import CosetLimitExceeded, IncompleteTableError, PresentationError
from src.logging_debug import log_execution
from src.presentation import Generator, GroupPresentation, Relator, require_involutions

logger = logging.getLogger("CosetEnumeration")

DEFAULT_COSET_LIMIT = 1_000_000
DEFAULT_DEFINITION_FACTOR = 8

UNDEFINED = -1


class Verdict(Enum):
    COMPLETE = "complete"
    EXCEEDED = "exceeded"


@dataclass(frozen=True)
class CosetTable:
    """
    Completed action of the generators on the cosets of the trivial subgroup.

    Cosets are numbered 1..order in breadth-first order from coset 1, the identity coset.
    An entry 0 marks an undefined action; such a table is incomplete and cannot act.
    """
    generators: Tuple[Generator, ...]
    rows: Tuple[Tuple[int, ...], ...]
    relators: Tuple[Relator, ...] = ()
    _column: Dict[Generator, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_column", {g: i for i, g in enumerate(self.generators)})

    def __hash__(self):
        return hash((self.generators, self.rows))

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def complete(self) -> bool:
        return all(all(entry > 0 for entry in row) for row in self.rows)

    def _require_complete(self) -> None:
        if not self.complete:
            raise IncompleteTableError("coset table has undefined entries",
                                       {"cosets": len(self.rows)})

    def column(self, g: Generator) -> int:
        try:
            return self._column[g]
        except KeyError:
            raise PresentationError(f"unknown generator {g}", {"generators": list(self.generators)})

    def act(self, coset: int, word: Sequence[Generator]) -> int:
        """Right action of a word, letters applied left to right"""
        self._require_complete()
        for g in word:
            coset = self.rows[coset - 1][self.column(g)]
        return coset

    def permutation(self, g: Generator) -> Tuple[int, ...]:
        """Images of cosets 1..n under g"""
        self._require_complete()
        col = self.column(g)
        return tuple(row[col] for row in self.rows)

    def stabilizes_all(self, word: Sequence[Generator]) -> bool:
        return all(self.act(c, word) == c for c in range(1, self.order + 1))

    def is_consistent(self) -> bool:
        """Entries complete and involutive, every relator traces to the identity from every coset"""
        if not self.complete:
            return False
        for c, row in enumerate(self.rows, start=1):
            for col, d in enumerate(row):
                if not 1 <= d <= self.order or self.rows[d - 1][col] != c:
                    return False
        return all(self.stabilizes_all(r.word * r.exponent) for r in self.relators)


@dataclass(frozen=True)
class EnumerationStats:
    defined: int
    coincidences: int
    max_live: int
    elapsed: float

    def to_dict(self) -> Dict[str, float]:
        return {"defined": self.defined, "coincidences": self.coincidences,
                "max_live": self.max_live, "elapsed": round(self.elapsed, 6)}


@dataclass(frozen=True)
class EnumerationResult:
    verdict: Verdict
    limit: int
    stats: EnumerationStats
    order: Optional[int] = None
    table: Optional[CosetTable] = None

    @property
    def complete(self) -> bool:
        return self.verdict is Verdict.COMPLETE

    def require_order(self) -> int:
        if not self.complete:
            raise CosetLimitExceeded(self.limit, self.stats.to_dict())
        return self.order

    def require_table(self) -> CosetTable:
        if self.table is None:
            raise IncompleteTableError(f"enumeration did not complete: exceeded({self.limit})",
                                       self.stats.to_dict())
        return self.table

    def __str__(self):
        return str(self.order) if self.complete else f"exceeded({self.limit})"


class _Exceeded(Exception):
    pass


class _Enumerator:
    """Working state: rows, union-find parents and counters"""

    def __init__(self, ngens: int, relators: List[List[int]], limit: int, max_defined: int):
        self.ngens = ngens
        self.relators = relators
        self.limit = limit
        self.max_defined = max_defined
        self.table: List[List[int]] = [[UNDEFINED] * ngens]
        self.parent: List[int] = [0]
        self.live = 1
        self.max_live = 1
        self.defined = 1
        self.coincidences = 0

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(self, c: int, g: int) -> int:
        if self.live >= self.limit or self.defined >= self.max_defined:
            raise _Exceeded()
        d = len(self.table)
        self.table.append([UNDEFINED] * self.ngens)
        self.parent.append(d)
        self.table[c][g] = d
        self.table[d][g] = c
        self.live += 1
        self.defined += 1
        self.max_live = max(self.max_live, self.live)
        return d

    def merge(self, k: int, lam: int, queue: deque) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, v = min(phi, psi), max(phi, psi)
            self.parent[v] = mu
            self.live -= 1
            self.coincidences += 1
            queue.append(v)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: deque = deque()
        self.merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            for g in range(self.ngens):
                delta = table[gamma][g]
                if delta == UNDEFINED:
                    continue
                table[delta][g] = UNDEFINED
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][g] != UNDEFINED:
                    self.merge(nu, table[mu][g], queue)
                elif table[nu][g] != UNDEFINED:
                    self.merge(mu, table[nu][g], queue)
                else:
                    table[mu][g] = nu
                    table[nu][g] = mu

    def scan_and_fill(self, alpha: int, word: List[int]) -> None:
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != UNDEFINED:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j]] != UNDEFINED:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            self.define(f, word[i])

    def has_holes(self) -> bool:
        return any(UNDEFINED in self.table[c] for c in range(len(self.table)) if self.parent[c] == c)

    def run(self) -> None:
        self.sweep()
        while self.has_holes():
            self.sweep()

    def sweep(self) -> None:
        alpha = 0
        while alpha < len(self.table):
            if self.parent[alpha] == alpha:
                for word in self.relators:
                    if self.parent[alpha] != alpha:
                        break
                    self.scan_and_fill(alpha, word)
                if self.parent[alpha] == alpha:
                    for g in range(self.ngens):
                        if self.table[alpha][g] == UNDEFINED:
                            self.define(alpha, g)
            alpha += 1

    def standardized_rows(self) -> List[Tuple[int, ...]]:
        """Live cosets renumbered 1..n in breadth-first order from the identity coset"""
        order = [0]
        number = {0: 1}
        for c in order:
            for g in range(self.ngens):
                d = self.rep(self.table[c][g])
                if d not in number:
                    number[d] = len(order) + 1
                    order.append(d)
        return [tuple(number[self.rep(self.table[c][g])] for g in range(self.ngens)) for c in order]


def _scan_words(p: GroupPresentation) -> List[List[int]]:
    column = {g: i for i, g in enumerate(p.generators)}
    words = []
    for r in p.relators:
        # g^(2k) holds in every involutive table
        if len(r.word) == 1 and r.exponent % 2 == 0:
            continue
        words.append([column[g] for g in r.word] * r.exponent)
    return words


@log_execution()
def coset_enumerate(p: GroupPresentation, limit: Optional[int] = None,
                    definition_factor: int = DEFAULT_DEFINITION_FACTOR) -> EnumerationResult:
    """
    Order of the presented group, or an ``exceeded(limit)`` verdict when more than ``limit``
    cosets would be live at once (or ``definition_factor * limit`` defined in total).
    Every generator needs its square relator; the one-column table is unsound otherwise.
    """
    limit = DEFAULT_COSET_LIMIT if limit is None else limit
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
        raise PresentationError(f"coset limit must be a positive integer, got {limit!r}")
    require_involutions(p)

    started = time.perf_counter()
    state = _Enumerator(len(p.generators), _scan_words(p), limit, definition_factor * limit)
    try:
        state.run()
    except _Exceeded:
        stats = EnumerationStats(state.defined, state.coincidences, state.max_live,
                                 time.perf_counter() - started)
        logger.info(f"Coset enumeration exceeded({limit})", extra={"extra_fields": stats.to_dict()})
        return EnumerationResult(Verdict.EXCEEDED, limit, stats)

    rows = state.standardized_rows()
    table = CosetTable(p.generators, tuple(rows), p.relators)
    stats = EnumerationStats(state.defined, state.coincidences, state.max_live,
                             time.perf_counter() - started)
    logger.debug(f"Coset enumeration complete: order {table.order}", extra={"extra_fields": stats.to_dict()})
    return EnumerationResult(Verdict.COMPLETE, limit, stats, table.order, table)


@dataclass(frozen=True)
class WordAction:
    image: int
    permutation: Tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(c == i for i, c in enumerate(self.permutation, start=1))


def multiplication_action(table: Union[CosetTable, EnumerationResult], word: Sequence[Generator]) -> WordAction:
    """Image of coset 1 under the word and the permutation the word induces on all cosets"""
    if isinstance(table, EnumerationResult):
        table = table.require_table()
    table._require_complete()
    permutation = tuple(table.act(c, word) for c in range(1, table.order + 1))
    return WordAction(permutation[0], permutation)


def permutation_closure_order(table: CosetTable, cap: Optional[int] = None) -> int:
    """
    Brute-force group order: close the generator permutations under composition.

    More than ``cap`` elements raises CosetLimitExceeded(cap).
    """
    table._require_complete()
    gens = [table.permutation(g) for g in table.generators]
    identity = tuple(range(1, table.order + 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for perm in frontier:
            for gen in gens:
                product = tuple(gen[c - 1] for c in perm)
                if product not in seen:
                    if cap is not None and len(seen) >= cap:
                        raise CosetLimitExceeded(cap, {"closure": len(seen)})
                    seen.add(product)
                    next_frontier.append(product)
        frontier = next_frontier
    return len(seen)
