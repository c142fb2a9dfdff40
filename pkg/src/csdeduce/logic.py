"""Propositional literals, clauses, clause sets and assignments.

Literals use the DIMACS convention: the positive integer ``k`` is variable
``k`` and ``-k`` is its negation. Variables are plain positive integers.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping

import numpy as np

from .config import LIMITS
from .errors import IncompleteAssignment, OracleLimit

Literal = int


def var(lit: Literal) -> int:
    return lit if lit > 0 else -lit


def complement(lit: Literal) -> Literal:
    return -lit


def lit_key(lit: Literal) -> tuple[int, bool]:
    """Canonical order: ascending variable, positive before negative."""
    return (lit if lit > 0 else -lit, lit < 0)


def make_literal(variable: int, positive: bool = True) -> Literal:
    if variable < 1:
        raise ValueError(f"variable index must be >= 1, got {variable}")
    return variable if positive else -variable


def format_literal(lit: Literal, names: Mapping[int, str] | None = None) -> str:
    name = names.get(var(lit)) if names else None
    name = name or f"l{var(lit)}"
    return name if lit > 0 else "~" + name


class Clause:
    """An immutable, duplicate-free disjunction of literals in canonical order."""

    __slots__ = ("lits", "set", "_hash")

    def __init__(self, literals: Iterable[Literal] = ()):
        s = frozenset(literals)
        if 0 in s:
            raise ValueError("0 is not a literal")
        self.set = s
        self.lits = tuple(sorted(s, key=lit_key))
        self._hash = hash(self.lits)

    @property
    def is_tautology(self) -> bool:
        s = self.set
        return any(-l in s for l in self.lits if l > 0)

    @property
    def is_empty(self) -> bool:
        return not self.lits

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(var(l) for l in self.lits)

    def __len__(self):
        return len(self.lits)

    def __iter__(self):
        return iter(self.lits)

    def __contains__(self, lit):
        return lit in self.set

    def __eq__(self, other):
        if isinstance(other, Clause):
            return self.lits == other.lits
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __le__(self, other: Clause) -> bool:
        return self.set <= other.set

    def __or__(self, other: Clause) -> Clause:
        return Clause(self.set | other.set)

    def __sub__(self, other) -> Clause:
        other = other.set if isinstance(other, Clause) else frozenset(other)
        return Clause(self.set - other)

    def __repr__(self):
        return f"Clause({list(self.lits)})"

    def __str__(self):
        return self.format()

    def format(self, names=None) -> str:
        if not self.lits:
            return "□"
        return " ∨ ".join(format_literal(l, names) for l in self.lits)


def normalize_clause(raw: Iterable[Literal]) -> Clause:
    return Clause(raw)


def clause(*lits: Literal) -> Clause:
    return Clause(lits)


class ClauseSet:
    """An ordered, immutable list of clauses. Duplicates are kept."""

    __slots__ = ("clauses", "universe")

    def __init__(self, clauses: Iterable[Clause | Iterable[Literal]] = ()):
        self.clauses = tuple(c if isinstance(c, Clause) else Clause(c) for c in clauses)
        self.universe = frozenset().union(*(c.variables for c in self.clauses))

    @classmethod
    def of(cls, *clauses: Iterable[Literal]) -> ClauseSet:
        return cls(clauses)

    def __len__(self):
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return ClauseSet(self.clauses[i])
        return self.clauses[i]

    def __eq__(self, other):
        if isinstance(other, ClauseSet):
            return self.clauses == other.clauses
        return NotImplemented

    def __hash__(self):
        return hash(self.clauses)

    def __add__(self, other: ClauseSet | Iterable[Clause]) -> ClauseSet:
        return ClauseSet(self.clauses + tuple(other))

    def __repr__(self):
        return f"ClauseSet({[list(c.lits) for c in self.clauses]})"

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.clauses) + "}"

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.universe))

    def dedupe(self) -> ClauseSet:
        return ClauseSet(dict.fromkeys(self.clauses))

    def as_set(self) -> frozenset[Clause]:
        return frozenset(self.clauses)

    def to_lists(self) -> list[list[int]]:
        return [list(c.lits) for c in self.clauses]

    def contains_empty(self) -> bool:
        return any(not c.lits for c in self.clauses)


class Assignment(Mapping):
    """A read-only map from variable to truth value."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[int, bool] | Iterable[tuple[int, bool]] = ()):
        self._values = {int(k): bool(v) for k, v in dict(values).items()}

    @classmethod
    def from_literals(cls, lits: Iterable[Literal]) -> Assignment:
        return cls({var(l): l > 0 for l in lits})

    def __getitem__(self, v):
        return self._values[v]

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return "Assignment({" + ", ".join(f"{v}: {int(self._values[v])}" for v in self) + "})"

    def is_total(self, universe: Iterable[int]) -> bool:
        return all(v in self._values for v in universe)

    def satisfies(self, lit: Literal) -> bool:
        return self._values[var(lit)] == (lit > 0)

    def literals(self) -> tuple[Literal, ...]:
        return tuple(v if self._values[v] else -v for v in self)


def evaluate(s: ClauseSet, a: Mapping[int, bool]) -> bool:
    missing = [v for v in s.universe if v not in a]
    if missing:
        raise IncompleteAssignment(missing)
    return all(any(a[var(l)] == (l > 0) for l in c.lits) for c in s.clauses)


def truth_table(s: ClauseSet, cap: int | None = None) -> tuple[tuple[int, ...], np.ndarray]:
    """Evaluate ``s`` under all 2^n assignments of its universe.

    Row ``r`` assigns the variable of rank ``i`` the bit ``n-1-i`` of ``r``, so
    rows ascend in lexicographic order with the lowest variable most significant.
    """
    cap = LIMITS.oracle_vars if cap is None else cap
    variables = s.variables
    n = len(variables)
    if n > cap:
        raise OracleLimit(n, cap)
    rows = np.arange(1 << n, dtype=np.int64)
    shift = {v: n - 1 - i for i, v in enumerate(variables)}
    values = {v: ((rows >> shift[v]) & 1).astype(bool) for v in variables}
    sat = np.ones(1 << n, dtype=bool)
    for c in s.clauses:
        hit = np.zeros(1 << n, dtype=bool)
        for l in c.lits:
            hit |= values[l] if l > 0 else ~values[-l]
        sat &= hit
    return variables, sat


def brute_force_model(s: ClauseSet, cap: int | None = None) -> Assignment | None:
    """Lexicographically least satisfying assignment over V(S), or None."""
    variables, sat = truth_table(s, cap)
    hits = np.flatnonzero(sat)
    if hits.size == 0:
        return None
    row = int(hits[0])
    n = len(variables)
    return Assignment({v: bool((row >> (n - 1 - i)) & 1) for i, v in enumerate(variables)})


def is_satisfiable(s: ClauseSet, cap: int | None = None) -> bool:
    return brute_force_model(s, cap) is not None
