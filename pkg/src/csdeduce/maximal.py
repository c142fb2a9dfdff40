"""Maximal contradictions S(n): coverage-based satisfiability, model
extraction, and the maximal-contradiction deduction procedure.

A maximal clause over a sorted universe (v_0, ..., v_{n-1}) is encoded as an
integer whose bit i is set iff v_i occurs positively.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .config import LIMITS
from .errors import CapacityError, LogicError, NotAWitness, NotRefutationCovering
from .kernel import is_standard_contradiction
from .logic import Assignment, Clause, ClauseSet, Literal, evaluate, var
from .proof import Proof, ProofStep, Separation

SAT = "SAT"
UNSAT = "UNSAT"
UNDETERMINED = "UNDETERMINED"
RESOURCE_OUT = "RESOURCE_OUT"


@dataclass(frozen=True)
class MaximalClause:
    universe: tuple[int, ...]
    index: int

    def __post_init__(self):
        if not 0 <= self.index < (1 << len(self.universe)):
            raise ValueError(f"index {self.index} out of range for {len(self.universe)} variables")

    @classmethod
    def from_literals(cls, lits: Iterable[Literal], universe: Iterable[int] | None = None) -> MaximalClause:
        lits = list(lits)
        universe = tuple(sorted(universe if universe is not None else {var(l) for l in lits}))
        polarity = {}
        for l in lits:
            if polarity.setdefault(var(l), l > 0) != (l > 0):
                raise ValueError("a maximal clause cannot contain a complementary pair")
        if set(polarity) != set(universe):
            raise ValueError("a maximal clause needs exactly one literal per universe variable")
        return cls(universe, sum(1 << i for i, v in enumerate(universe) if polarity[v]))

    @property
    def literals(self) -> tuple[Literal, ...]:
        return tuple(v if (self.index >> i) & 1 else -v for i, v in enumerate(self.universe))

    def clause(self) -> Clause:
        return Clause(self.literals)

    def negation(self) -> MaximalClause:
        return MaximalClause(self.universe, ~self.index & ((1 << len(self.universe)) - 1))

    def contains(self, c: Clause) -> bool:
        return c.set <= set(self.literals)

    def __str__(self):
        return str(self.clause())


def generate_maximal_contradiction(variables: Iterable[int], cap: int | None = None) -> ClauseSet:
    cap = LIMITS.materialize_vars if cap is None else cap
    universe = tuple(sorted(set(variables)))
    if not 1 <= len(universe) <= cap:
        if universe:
            raise CapacityError(f"maximal contradiction too large to materialize ({len(universe)} > {cap} variables)")
        raise ValueError("maximal contradiction needs at least one variable")
    return ClauseSet(MaximalClause(universe, i).clause() for i in range(1 << len(universe)))


def _completions(base: int, free_bits: Sequence[int]) -> np.ndarray:
    idx = np.array([base], dtype=np.int64)
    for b in free_bits:
        idx = np.concatenate([idx, idx | (1 << b)])
    return idx


@dataclass
class CoverageTable:
    universe: tuple[int, ...]
    covered: np.ndarray
    first: np.ndarray  # generating clause position, -1 where uncovered

    @property
    def size(self) -> int:
        return int(self.covered.size)

    @property
    def count(self) -> int:
        return int(self.covered.sum())

    @property
    def total(self) -> bool:
        return bool(self.covered.all())

    def uncovered(self) -> np.ndarray:
        return np.flatnonzero(~self.covered)

    def maximal(self, index: int) -> MaximalClause:
        return MaximalClause(self.universe, int(index))


def coverage(s: ClauseSet, cap: int | None = None, universe: Iterable[int] | None = None) -> CoverageTable:
    """Mark every maximal clause over V(S) that contains some clause of ``s``.

    Tautologies contain no maximal clause and mark nothing; the empty clause
    marks everything.
    """
    cap = LIMITS.coverage_vars if cap is None else cap
    universe = tuple(sorted(s.universe if universe is None else set(universe)))
    n = len(universe)
    if n > cap:
        raise CapacityError(f"universe too large ({n} > {cap} variables)")
    rank = {v: i for i, v in enumerate(universe)}
    covered = np.zeros(1 << n, dtype=bool)
    first = np.full(1 << n, -1, dtype=np.int64)
    for j, c in enumerate(s):
        if c.is_tautology:
            continue
        fixed = {rank[var(l)] for l in c.lits}
        base = sum(1 << rank[l] for l in c.lits if l > 0)
        idx = _completions(base, [b for b in range(n) if b not in fixed])
        covered[idx] = True
        fresh = idx[first[idx] < 0]
        first[fresh] = j
    return CoverageTable(universe, covered, first)


def model_from_maximal_clause(d: MaximalClause) -> Assignment:
    """I_D: a variable is false iff it occurs positively in D."""
    return Assignment({v: not ((d.index >> i) & 1) for i, v in enumerate(d.universe)})


@dataclass(frozen=True)
class Verdict:
    tag: str
    covered: int
    total: int
    witness: MaximalClause | None = None
    model: Assignment | None = None

    @property
    def satisfiable(self) -> bool:
        return self.tag == SAT


def decide(s: ClauseSet, cap: int | None = None) -> Verdict:
    table = coverage(s, cap)
    if table.total:
        return Verdict(UNSAT, table.count, table.size)
    d = table.maximal(int(table.uncovered()[0]))
    return Verdict(SAT, table.count, table.size, d, model_from_maximal_clause(d))


def satisfiable_instance(s: ClauseSet, d: MaximalClause) -> list[Literal]:
    """One literal of C ∩ ~D per clause C, lowest in canonical order."""
    negated = set(d.negation().literals)
    out = []
    for c in s:
        pick = next((l for l in c.lits if l in negated), None)
        if pick is None:
            raise NotAWitness(f"maximal clause is expandable; not a witness ({c} ⊆ {d})")
        out.append(pick)
    return out


@dataclass(frozen=True)
class DeductionConfig:
    v0_budget: int = 3
    retry_budget: int = 64
    seed: int = 0
    step_cap: int = 10**4

    def __post_init__(self):
        if self.v0_budget < 1 or self.retry_budget < 1 or self.step_cap < 1:
            raise ValueError("deduction budgets must be positive")


_METHODS = {"I": 1, "II": 2, "III": 3, "1": 1, "2": 2, "3": 3, 1: 1, 2: 2, 3: 3}


def _sweep(clauses: list[Clause], polarity: dict[int, Literal], universe: Sequence[int]):
    """Delete clauses containing ~p(1), ~p(2), ... in turn.

    Returns the survivors and the set of variables whose turn deleted something.
    """
    used = set()
    for v in universe:
        if not clauses:
            break
        neg = -polarity[v]
        kept = [c for c in clauses if neg not in c.set]
        if len(kept) < len(clauses):
            used.add(v)
        clauses = kept
    return clauses, used


def _adjust(survivors: list[Clause], polarity: dict[int, Literal], universe: Sequence[int], used: set[int]) -> bool:
    """Flip uninvolved variables of D to delete the survivors, greedily.

    Only variables that deleted nothing are flipped, so clauses already
    deleted stay deleted. Mutates ``polarity``; True when all survivors go.
    """
    free = [v for v in universe if v not in used]
    while survivors and free:
        gains = [(sum(polarity[v] in c.set for c in survivors), v) for v in free]
        gain, v = max(gains, key=lambda g: (g[0], -g[1]))
        if gain == 0:
            return False
        polarity[v] = -polarity[v]
        free.remove(v)
        survivors = [c for c in survivors if -polarity[v] not in c.set]
    return not survivors


def find_model(
    s: ClauseSet,
    method="II",
    cfg: DeductionConfig | None = None,
    candidates: Iterable[MaximalClause | Iterable[Literal]] = (),
) -> Assignment | None:
    """Search for a non-expandable maximal clause and return its model I_D.

    Candidate maximal clauses come first from ``candidates`` and then from a
    ``random.Random(cfg.seed)`` stream; at most ``cfg.retry_budget`` are tried.
    Method I tests the whole candidate, II deletes clauses variable by
    variable, III additionally repairs a failed sweep by flipping variables
    that took no part in it.
    """
    cfg = cfg or DeductionConfig()
    try:
        m = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    universe = s.variables
    n = len(universe)
    rng = random.Random(cfg.seed)
    supplied = iter(candidates)
    clauses = list(s.clauses)
    for _ in range(cfg.retry_budget):
        given = next(supplied, None)
        if given is None:
            d = MaximalClause(universe, rng.getrandbits(n) if n else 0)
        elif isinstance(given, MaximalClause):
            d = given
        else:
            d = MaximalClause.from_literals(given, universe)
        polarity = dict(zip(universe, d.literals))
        if m == 1:
            if any(d.contains(c) for c in clauses):
                continue
        else:
            survivors, used = _sweep(clauses, polarity, universe)
            if survivors and not (m == 3 and _adjust(survivors, polarity, universe, used)):
                continue
        model = Assignment({v: polarity[v] < 0 for v in universe})
        assert evaluate(s, model)
        return model
    return None


# -- redundancy processing ---------------------------------------------------


@dataclass
class _Item:
    id: int | None
    clause: Clause


def _drop_subsumed(items: list[_Item]) -> list[_Item]:
    order = sorted(range(len(items)), key=lambda i: len(items[i].clause))
    kept: list[int] = []
    for i in order:
        c = items[i].clause.set
        if not any(items[k].clause.set <= c for k in kept):
            kept.append(i)
    keep = set(kept)
    return [it for i, it in enumerate(items) if i in keep]


def _simplify(items: list[_Item], derive: Callable[[_Item, _Item, Clause], _Item]) -> list[_Item]:
    while True:
        items = [it for it in items if not it.clause.is_tautology]
        empty = next((it for it in items if it.clause.is_empty), None)
        if empty is not None:
            return [empty]
        items = _drop_subsumed(items)
        unit = next(
            (u for u in items if len(u.clause) == 1 and any(-u.clause.lits[0] in it.clause.set for it in items)),
            None,
        )
        if unit is None:
            return items
        x = unit.clause.lits[0]
        out = []
        for it in items:
            if it is not unit and -x in it.clause.set:
                it = derive(unit, it, it.clause - (-x,))
                if it.clause.is_empty:
                    return [it]
            out.append(it)
        items = out


def unit_rule(s: ClauseSet, lit: Literal) -> ClauseSet:
    """One application of the unit rule for ``lit``: other clauses containing it
    are deleted and its complement is struck from the rest. The unit stays."""
    out, seen_unit = [], False
    for c in s:
        if c.lits == (lit,) and not seen_unit:
            seen_unit = True
            out.append(c)
        elif lit in c.set:
            continue
        elif -lit in c.set:
            out.append(c - (-lit,))
        else:
            out.append(c)
    return ClauseSet(out)


def redundancy_process(s: ClauseSet) -> ClauseSet:
    """Fixpoint of tautology, duplicate and subsumption deletion and the unit rule."""
    items = _simplify([_Item(None, c) for c in s], lambda u, it, new: _Item(None, new))
    return ClauseSet(it.clause for it in items)


# -- maximal contradiction deduction -----------------------------------------


@dataclass(frozen=True)
class Deduction:
    """One deduction round over V_0: for every O_t the chosen clause position,
    its kept part C_t ∩ O_t and its residual C_t - O_t."""

    v0: tuple[int, ...]
    chosen: tuple[int, ...]
    kept: tuple[Clause, ...]
    residuals: tuple[Clause, ...]

    @property
    def resolvent(self) -> Clause:
        return Clause(frozenset().union(*(r.set for r in self.residuals)))

    @property
    def separated(self) -> ClauseSet:
        return ClauseSet(self.kept)


def plan_deduction(s: ClauseSet, v0: Iterable[int], cfg: DeductionConfig | None = None) -> Deduction:
    """Pick one clause per maximal clause O_t over V_0.

    Selection order: C_t must meet O_t; then maximize the overlap of its
    residual with the intersection of earlier residuals (their union when that
    intersection is empty); then minimize residual literals not seen before;
    then prefer residuals that avoid V_0 variables; then the lowest position.
    """
    cfg = cfg or DeductionConfig()
    universe = tuple(sorted(set(v0)))
    if not universe:
        raise ValueError("V_0 must be nonempty")
    if len(universe) > cfg.v0_budget:
        raise ValueError(f"|V_0| = {len(universe)} exceeds budget {cfg.v0_budget}")
    in_v0 = set(universe)
    chosen, kept, residuals = [], [], []
    inter: frozenset | None = None
    union: frozenset = frozenset()
    for t in range(1 << len(universe)):
        o = set(MaximalClause(universe, t).literals)
        ref = inter if inter else union
        best = None
        for j, c in enumerate(s):
            meet = c.set & o
            if not meet:
                continue
            res = c.set - o
            key = (-len(res & ref), len(res - union), sum(var(l) in in_v0 for l in res), j)
            if best is None or key < best[0]:
                best = (key, j, meet, res)
        if best is None:
            raise NotRefutationCovering(f"V_0 not refutation-covering: no clause meets {Clause(o)}")
        _, j, meet, res = best
        chosen.append(j)
        kept.append(Clause(meet))
        residuals.append(Clause(res))
        inter = res if inter is None else inter & res
        union = union | res
    plan = Deduction(universe, tuple(chosen), tuple(kept), tuple(residuals))
    assert is_standard_contradiction(plan.kept)
    return plan


def deduction_step(s: ClauseSet, v0: Iterable[int], cfg: DeductionConfig | None = None) -> Clause:
    return plan_deduction(s, v0, cfg).resolvent


def v0_candidates(s: ClauseSet, budget: int):
    """Variable subsets ranked by occurrence count, largest subsets first."""
    counts = Counter(var(l) for c in s for l in c.lits)
    ranked = sorted(counts, key=lambda v: (-counts[v], v))
    for size in range(min(budget, len(ranked)), 0, -1):
        yield from itertools.combinations(ranked, size)


@dataclass(frozen=True)
class Round:
    v0: tuple[int, ...]
    step_id: int
    resolvent: Clause
    separated: ClauseSet


@dataclass
class MaxContraResult:
    status: str
    proof: Proof
    rounds: list[Round] = field(default_factory=list)
    residual: ClauseSet = field(default_factory=ClauseSet)


def maxcontra_refute(s: ClauseSet, cfg: DeductionConfig | None = None) -> MaxContraResult:
    """Alternate redundancy processing with deduction rounds until the empty
    clause appears, no V_0 yields a new clause, or ``cfg.step_cap`` rounds pass.

    Every derived clause, including unit-rule strengthenings, is recorded as an
    S-CS step so the returned proof can be checked by ``verify_proof``.
    """
    cfg = cfg or DeductionConfig()
    inputs = tuple(s.clauses)
    steps: list[ProofStep] = []
    rounds: list[Round] = []
    next_id = len(inputs) + 1

    def record(premises, kept, result) -> _Item:
        nonlocal next_id
        step = ProofStep(next_id, tuple(premises), Separation(tuple(kept)), result)
        steps.append(step)
        next_id += 1
        return _Item(step.id, result)

    def derive(unit: _Item, it: _Item, new: Clause) -> _Item:
        x = unit.clause.lits[0]
        return record((unit.id, it.id), (unit.clause, Clause((-x,))), new)

    items = [_Item(i, c) for i, c in enumerate(inputs, start=1)]
    status = RESOURCE_OUT
    for _ in range(cfg.step_cap):
        items = _simplify(items, derive)
        if any(it.clause.is_empty for it in items):
            status = UNSAT
            break
        current = ClauseSet(it.clause for it in items)
        plan = None
        for v0 in v0_candidates(current, cfg.v0_budget):
            try:
                candidate = plan_deduction(current, v0, cfg)
            except NotRefutationCovering:
                continue
            r = candidate.resolvent
            if r.is_tautology or any(it.clause.set <= r.set for it in items):
                continue
            plan = candidate
            break
        if plan is None:
            status = UNDETERMINED
            break
        item = record([items[j].id for j in plan.chosen], plan.kept, plan.resolvent)
        rounds.append(Round(plan.v0, item.id, item.clause, plan.separated))
        items.append(item)
    else:
        items = _simplify(items, derive)
        if any(it.clause.is_empty for it in items):
            status = UNSAT
    proof = Proof(inputs, tuple(steps), complete=status == UNSAT)
    return MaxContraResult(status, proof, rounds, ClauseSet(it.clause for it in items))


def check_witness(s: ClauseSet, d: MaximalClause) -> bool:
    """All four characterizations of a model-bearing maximal clause at once."""
    non_expandable = not any(d.contains(c) for c in s)
    dset = set(d.literals)
    complement_hit = all(any(-x in dset for x in c.lits) for c in s)
    negated = set(d.negation().literals)
    meets_negation = all(c.set & negated for c in s)
    if not (non_expandable == complement_hit == bool(meets_negation)):
        raise LogicError("witness characterizations disagree")
    return non_expandable and evaluate(s, model_from_maximal_clause(d))
