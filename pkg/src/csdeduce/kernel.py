"""Standard contradictions: the Cartesian complementary-pair test and the
operations that provably preserve it (sub-selection, expansion, shrinking).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import EmptyClauseError, SelectionError, ShrinkError
from .logic import Clause, ClauseSet, Literal, brute_force_model, var


def _lits(s) -> list[tuple[int, ...]]:
    return [c.lits if isinstance(c, Clause) else tuple(c) for c in s]


def consistent_choice(s: ClauseSet | Sequence[Clause]) -> tuple[Literal, ...] | None:
    """Find one literal per clause such that no two chosen literals clash.

    Returns the tuple in clause order, or None when every tuple of the
    Cartesian product contains a complementary pair.

    Clauses are visited shortest first. A clause that already contains a
    chosen literal reuses it without branching: any completion found after
    picking a fresh literal is also a completion of the smaller chosen set.
    Failed (depth, chosen-set) states are memoized.
    """
    clauses = _lits(s)
    m = len(clauses)
    if any(not c for c in clauses):
        raise EmptyClauseError("empty clause has no literal choice")
    order = sorted(range(m), key=lambda i: len(clauses[i]))
    pick = [0] * m
    chosen: set[int] = set()
    failed: set = set()
    stack: list[list] = []  # [depth, options, next option, memo key, literal added]
    d = 0
    while True:
        while d < m:
            c = clauses[order[d]]
            hit = next((l for l in c if l in chosen), None)
            if hit is None:
                break
            pick[order[d]] = hit
            d += 1
        if d == m:
            return tuple(pick)
        key = (d, frozenset(chosen))
        options = [] if key in failed else [l for l in c if -l not in chosen]
        stack.append([d, options, 0, key, None])
        while True:
            if not stack:
                return None
            frame = stack[-1]
            if frame[4] is not None:
                chosen.discard(frame[4])
                frame[4] = None
            if frame[2] < len(frame[1]):
                l = frame[1][frame[2]]
                frame[2] += 1
                chosen.add(l)
                frame[4] = l
                pick[order[frame[0]]] = l
                d = frame[0] + 1
                break
            failed.add(frame[3])
            stack.pop()


def is_standard_contradiction(s: ClauseSet | Sequence[Clause]) -> bool:
    """True iff every choice of one literal per clause contains a complementary pair.

    An empty clause set is not a contradiction (the empty tuple has no pair).
    """
    if len(s) == 0:
        return False
    return consistent_choice(s) is None


def naive_is_standard_contradiction(s: ClauseSet | Sequence[Clause]) -> bool:
    """Plain enumeration of the Cartesian product. Slow; used as a cross-check."""
    clauses = _lits(s)
    if any(not c for c in clauses):
        raise EmptyClauseError("empty clause has no literal choice")
    if not clauses:
        return False
    for tup in itertools.product(*clauses):
        chosen = set(tup)
        if not any(-l in chosen for l in chosen):
            return False
    return True


def sample_pair_free(s: ClauseSet, samples: int, rng: random.Random) -> int:
    """Count uniformly sampled tuples that contain no complementary pair."""
    clauses = _lits(s)
    bad = 0
    for _ in range(samples):
        chosen = {rng.choice(c) for c in clauses}
        if not any(-l in chosen for l in chosen):
            bad += 1
    return bad


def is_quasi_contradiction(s: ClauseSet, cap: int | None = None) -> bool:
    return brute_force_model(s, cap) is None


@dataclass(frozen=True)
class Selection:
    """Per-clause literal subsets picked out of a host clause set."""

    entries: tuple[frozenset[Literal], ...]

    @classmethod
    def of(cls, *entries: Iterable[Literal]) -> Selection:
        return cls(tuple(frozenset(e) for e in entries))

    @classmethod
    def identity(cls, s: ClauseSet) -> Selection:
        return cls(tuple(c.set for c in s))


def sub_select(s: ClauseSet, sel: Selection) -> ClauseSet:
    if len(sel.entries) != len(s):
        raise SelectionError(f"selection has {len(sel.entries)} entries for {len(s)} clauses")
    out = []
    for i, (c, e) in enumerate(zip(s, sel.entries)):
        if not e:
            raise SelectionError("selection must be nonempty")
        if not e <= c.set:
            raise SelectionError(f"selection entry {i} is not a subset of clause {c}")
        out.append(Clause(e))
    return ClauseSet(out)


def expand_by_literal(s: ClauseSet, lit: Literal) -> ClauseSet:
    """{C ∨ l} followed by {C ∨ ~l}, each in the original clause order."""
    return ClauseSet([Clause(c.set | {lit}) for c in s] + [Clause(c.set | {-lit}) for c in s])


def expand_by_clauses(s: ClauseSet, extra: ClauseSet | Iterable[Clause]) -> ClauseSet:
    extra = ClauseSet(extra)
    if extra.contains_empty():
        raise EmptyClauseError("expansion clauses must be nonempty")
    return s + extra


def shrink_by_variable(s: ClauseSet, v: int, dedupe: bool = False) -> ClauseSet:
    v = var(v)
    out = []
    for c in s:
        shrunk = c - (v, -v)
        if shrunk.is_empty:
            raise ShrinkError("shrink empties a clause")
        out.append(shrunk)
    result = ClauseSet(out)
    if not is_standard_contradiction(result):
        raise ShrinkError("shrink breaks contradiction")
    return result.dedupe() if dedupe else result
