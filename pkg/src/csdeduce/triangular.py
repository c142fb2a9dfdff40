"""Triangular standard contradictions, their homotypic sub-contradictions,
and the sub-contradiction counts CN(n) and MSC(n).

A triangle over boundary literals x_1..x_{k-1} has k clauses. Clause t < k may
occupy slot t (holding x_t) and slots j < t (holding ~x_j); clause k may occupy
slots 1..k-1, all negative. A triangle stores which slots each clause occupies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

from .config import LIMITS
from .errors import CapacityError, ShapeViolation, TriangleError
from .kernel import is_standard_contradiction
from .logic import Clause, ClauseSet, Literal, var


@dataclass(frozen=True)
class Triangle:
    boundary: tuple[Literal, ...]
    presence: tuple[frozenset[int], ...]

    def __post_init__(self):
        k = self.k
        if k < 2:
            raise TriangleError("a triangle needs at least two clauses")
        if len({var(x) for x in self.boundary}) != len(self.boundary) or 0 in self.boundary:
            raise TriangleError("invalid main boundary")
        if len(self.presence) != k:
            raise TriangleError(f"expected {k} presence masks, got {len(self.presence)}")
        for t, slots in enumerate(self.presence, start=1):
            allowed = range(1, min(t, k - 1) + 1)
            if not slots <= set(allowed):
                raise ShapeViolation(f"clause {t} occupies slots outside 1..{allowed.stop - 1}")
            if t < k and t not in slots:
                raise ShapeViolation(f"clause {t} must hold boundary literal x_{t}")
        if k - 1 not in self.presence[k - 1]:
            raise ShapeViolation(f"closing clause must hold ~x_{k - 1}")

    @property
    def k(self) -> int:
        return len(self.boundary) + 1

    @property
    def is_full(self) -> bool:
        return all(len(slots) == min(t, self.k - 1) for t, slots in enumerate(self.presence, start=1))

    def clause(self, t: int) -> Clause:
        lits = []
        for j in self.presence[t - 1]:
            x = self.boundary[j - 1]
            lits.append(x if j == t else -x)
        return Clause(lits)

    def clauses(self) -> ClauseSet:
        return ClauseSet(self.clause(t) for t in range(1, self.k + 1))

    @classmethod
    def from_clause_set(cls, s: ClauseSet) -> Triangle:
        """Recover boundary and slots from a triangle-shaped clause set."""
        k = len(s)
        if k < 2:
            raise ShapeViolation("shape violation: fewer than two clauses")
        if len(s[0]) != 1:
            raise ShapeViolation("shape violation: first clause must be a unit")
        boundary: list[Literal] = []
        presence = []
        for t, c in enumerate(s, start=1):
            negs = {-x: j for j, x in enumerate(boundary, start=1)}
            slots = {negs[l] for l in c.lits if l in negs}
            fresh = [l for l in c.lits if l not in negs]
            if t < k:
                if len(fresh) != 1:
                    raise ShapeViolation(f"shape violation: clause {t} needs exactly one new boundary literal")
                boundary.append(fresh[0])
                slots.add(t)
            elif fresh:
                raise ShapeViolation(f"shape violation: closing clause has literals {fresh} off the triangle")
            presence.append(frozenset(slots))
        try:
            return cls(tuple(boundary), tuple(presence))
        except TriangleError as exc:
            raise ShapeViolation(f"shape violation: {exc}") from None


def build_full_triangle(boundary) -> Triangle:
    boundary = tuple(boundary)
    k = len(boundary) + 1
    if k < 2:
        raise TriangleError("invalid main boundary: need at least one literal")
    presence = tuple(frozenset(range(1, min(t, k - 1) + 1)) for t in range(1, k + 1))
    return Triangle(boundary, presence)


def _cut(tri: Triangle, h: int, i: int) -> ClauseSet:
    """Clauses h..i restricted to slots h..i-1; clause i loses its own slot."""
    out = []
    for t in range(h, i + 1):
        slots = {j for j in tri.presence[t - 1] if h <= j <= min(t, i - 1)}
        if not slots:
            raise TriangleError(f"cut leaves clause {t} empty")
        out.append(Clause(tri.boundary[j - 1] if j == t else -tri.boundary[j - 1] for j in slots))
    return ClauseSet(out)


def sub_transverse(tri: Triangle, i: int) -> ClauseSet:
    if not 1 <= i <= tri.k - 1:
        raise TriangleError(f"transverse cut index {i} outside 1..{tri.k - 1}")
    return _cut(tri, i, tri.k)


def sub_vertical(tri: Triangle, i: int) -> ClauseSet:
    if not 2 <= i <= tri.k:
        raise TriangleError(f"vertical cut index {i} outside 2..{tri.k}")
    return _cut(tri, 1, i)


def sub_middle(tri: Triangle, h: int, i: int) -> ClauseSet:
    if not 1 <= h <= i - 1 <= tri.k - 1:
        raise TriangleError(f"middle cut needs 1 <= h <= i-1 <= k-1, got h={h}, i={i}")
    return _cut(tri, h, i)


def sub_delete(tri: Triangle, removed) -> ClauseSet:
    removed = set(removed)
    k = tri.k
    if removed & {k - 1, k}:
        raise TriangleError("cannot delete closing structure")
    if not removed <= set(range(1, k - 1)):
        raise TriangleError(f"deleted indices must lie in 1..{k - 2}")
    out = []
    for t in range(1, k + 1):
        if t in removed:
            continue
        slots = tri.presence[t - 1] - removed
        out.append(Clause(tri.boundary[j - 1] if j == t else -tri.boundary[j - 1] for j in slots))
    return ClauseSet(out)


@dataclass(frozen=True)
class Peeled:
    clauses: ClauseSet
    sub_triangle: bool


def peel_tail(s: ClauseSet | Triangle) -> Peeled:
    """Drop the closing clause and x_{T-1}, then close at the first nonempty
    negative part D_i^0 scanning downward from T-1.

    With D_i^0's highest literal ~x_{j0}, the result is D_1..D_{j0} plus D_i^0.
    When every D_t^0 is empty the result is the unit {x_1} with
    ``sub_triangle`` False.
    """
    tri = s if isinstance(s, Triangle) else Triangle.from_clause_set(s)
    T = tri.k
    for i in range(T - 1, 1, -1):
        negative = tri.presence[i - 1] - {i}
        if negative:
            j0 = max(negative)
            head = [tri.clause(t) for t in range(1, j0 + 1)]
            closing = Clause(-tri.boundary[j - 1] for j in negative)
            return Peeled(ClauseSet(head + [closing]), True)
    return Peeled(ClauseSet([tri.clause(1)]), False)


# -- counting ------------------------------------------------------------------


def count_cn(n: int) -> int:
    """Sub-contradictions of an n-clause full triangle keeping every clause."""
    if n < 2:
        raise ValueError("triangle needs at least two clauses")
    placements = prod(sum(comb(j, k) for k in range(1, j + 1)) for j in range(1, n))
    return placements * sum(comb(n - 1, k) for k in range(1, n))


def count_msc(n: int) -> int:
    """Sub-contradictions of the maximal contradiction over n variables."""
    if n < 1:
        raise ValueError("maximal contradiction needs at least one variable")
    return sum(comb(n, i) for i in range(1, n + 1)) ** (2**n)


@dataclass(frozen=True)
class BruteCount:
    count: int
    rejected: int
    distinct: int | None = None


def _nonempty_subsets(c: Clause):
    lits = c.lits
    return [frozenset(sub) for r in range(1, len(lits) + 1) for sub in itertools.combinations(lits, r)]


def brute_count_sub_contradictions(s: ClauseSet, cap: int | None = None, distinct: bool = False) -> BruteCount:
    """Enumerate every per-clause nonempty sub-selection and kernel-check each.

    ``count`` counts selections (positions matter); ``distinct`` additionally
    counts the different clause sets they produce.
    """
    cap = LIMITS.enumeration if cap is None else cap
    size = prod((1 << len(c)) - 1 for c in s)
    if size > cap:
        raise CapacityError(f"enumeration too large ({size} > {cap} selections)")
    count = rejected = 0
    seen = set() if distinct else None
    for sel in itertools.product(*(_nonempty_subsets(c) for c in s)):
        clauses = [Clause(e) for e in sel]
        if is_standard_contradiction(clauses):
            count += 1
            if seen is not None:
                seen.add(frozenset(clauses))
        else:
            rejected += 1
    return BruteCount(count, rejected, len(seen) if seen is not None else None)
