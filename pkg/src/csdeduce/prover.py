"""Given-clause refutation search built on the S-CS rule.

Each selected clause seeds a greedily grown triangular separation
(D_1 = x_1, D_t = x_t ∨ ~x_1 ∨ ... kept parts, closed by a clause whose kept
part lies inside {~x_1, ...}); binary resolution against the active clauses
always runs as well so that saturation is complete.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from .config import LIMITS
from .kernel import is_standard_contradiction
from .logic import Clause, ClauseSet, lit_key, var
from .proof import Proof, ProofStep, Separation

PROOF = "proof"
SATURATED = "saturated"
RESOURCE_OUT = "resource-out"

STRATEGIES = ("triangular", "binary")


@dataclass(frozen=True)
class ProverConfig:
    strategy: str = "triangular"
    step_cap: int = 10**4
    triangle_cap: int = LIMITS.triangle_clauses
    seed: int = 0

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.step_cap < 1 or self.triangle_cap < 2:
            raise ValueError("step_cap must be >= 1 and triangle_cap >= 2")


@dataclass(frozen=True)
class TriangularSeparation:
    premises: tuple[int, ...]  # positions in the searched clause list
    separation: Separation
    boundary: tuple[int, ...]
    result: Clause


def _grow_triangle(seed: int, pool: Sequence[Clause], cap: int) -> TriangularSeparation | None:
    occurrences = Counter(l for c in pool for l in c.lits)
    start = pool[seed]
    if start.is_empty:
        return None
    x1 = min(start.lits, key=lambda l: (-occurrences[-l], lit_key(l)))
    boundary = [x1]
    negs = {-x1}
    premises = [seed]
    kept = [Clause((x1,))]
    acc = set(start.set - {x1})
    while len(premises) < cap:
        last = len(premises) == cap - 1
        boundary_vars = {var(x) for x in boundary}
        best = None
        for j, c in enumerate(pool):
            meet = c.set & negs
            if not meet:
                continue
            res = c.set - meet
            key = (len(res - acc), len(res), 0, 0, j, (0, False))
            if best is None or key < best[0]:
                best = (key, j, meet, None)
            if last:
                continue
            for y in res:
                if var(y) in boundary_vars:
                    continue
                rest = res - {y}
                key = (len(rest - acc), len(rest), 1, -occurrences[-y], j, lit_key(y))
                if key < best[0]:
                    best = (key, j, meet, y)
        if best is None:
            return None
        _, j, meet, y = best
        c = pool[j]
        premises.append(j)
        if y is None:
            kept.append(Clause(meet))
            acc |= c.set - meet
            sep = Separation(tuple(kept))
            assert is_standard_contradiction(sep.kept)
            return TriangularSeparation(tuple(premises), sep, tuple(boundary), Clause(acc))
        kept.append(Clause(meet | {y}))
        acc |= c.set - meet - {y}
        boundary.append(y)
        negs.add(-y)
    return None


def find_triangular_separation(
    s: ClauseSet, seed_clause: int, cfg: ProverConfig | None = None
) -> TriangularSeparation | None:
    """Grow a triangle from clause position ``seed_clause`` of ``s``.

    The first boundary literal is the seed literal whose complement is most
    frequent. Each later step adds the clause meeting {~x_1, ...} that
    introduces the fewest new residual literals, either extending the
    boundary with one fresh literal or closing the triangle (closing wins
    ties). Returns None when nothing closes within ``cfg.triangle_cap``
    clauses. This search order is a heuristic of this library.
    """
    cfg = cfg or ProverConfig()
    pool = [c for c in s]
    return _grow_triangle(seed_clause, pool, cfg.triangle_cap)


@dataclass
class RefuteResult:
    status: str
    proof: Proof | None = None
    iterations: int = 0
    generated: int = 0

    def __bool__(self):
        return self.status == PROOF


class SaturationProver:
    """Passive clauses are processed in (length, id) order.

    New clauses pass tautology deletion and forward subsumption, and
    backward-subsume older clauses. ``partial_proof`` exposes all steps
    recorded so far, for flushing an interrupted run.
    """

    def __init__(self, s: ClauseSet, cfg: ProverConfig | None = None):
        self.cfg = cfg or ProverConfig()
        self.inputs = tuple(s.clauses)
        self.clauses: dict[int, Clause] = {}
        self.steps: dict[int, ProofStep] = {}
        self.deleted: set[int] = set()
        self.active: list[int] = []
        self.index: dict[int, set[int]] = defaultdict(set)
        self.passive: list[tuple[int, int]] = []
        self.next_id = len(self.inputs) + 1
        self.iterations = 0
        self.empty: int | None = None
        for i, c in enumerate(self.inputs, start=1):
            self.clauses[i] = c
            if c.is_empty and self.empty is None:
                self.empty = i
            if c.is_tautology or self._subsumed(c):
                self.deleted.add(i)
                continue
            self._backward(c, i)
            heapq.heappush(self.passive, (len(c), i))

    def _live(self):
        for _, i in self.passive:
            if i not in self.deleted:
                yield i
        for i in self.active:
            if i not in self.deleted:
                yield i

    def _subsumed(self, c: Clause) -> bool:
        return any(self.clauses[i].set <= c.set for i in self._live())

    def _backward(self, c: Clause, new_id: int):
        for i in list(self._live()):
            if i != new_id and c.set <= self.clauses[i].set:
                self.deleted.add(i)

    def _add(self, premises, kept, result: Clause) -> int | None:
        if result.is_tautology:
            return None
        if not result.is_empty and self._subsumed(result):
            return None
        sid = self.next_id
        self.next_id += 1
        self.clauses[sid] = result
        self.steps[sid] = ProofStep(sid, tuple(premises), Separation(tuple(kept)), result)
        if result.is_empty:
            self.empty = sid
            return sid
        self._backward(result, sid)
        heapq.heappush(self.passive, (len(result), sid))
        return sid

    def _activate(self, gid: int):
        self.active.append(gid)
        for l in self.clauses[gid].lits:
            self.index[l].add(gid)

    def step(self) -> bool:
        """Process one given clause. False when nothing is left to do."""
        while self.passive:
            _, gid = heapq.heappop(self.passive)
            if gid not in self.deleted:
                break
        else:
            return False
        self.iterations += 1
        g = self.clauses[gid]
        if self.cfg.strategy == "triangular":
            ids = [i for i in self.active if i not in self.deleted] + [gid]
            tri = _grow_triangle(len(ids) - 1, [self.clauses[i] for i in ids], self.cfg.triangle_cap)
            if tri is not None:
                self._add([ids[j] for j in tri.premises], tri.separation.kept, tri.result)
                if self.empty is not None:
                    return False
        for x in g.lits:
            for aid in sorted(self.index[-x]):
                if aid in self.deleted:
                    continue
                a = self.clauses[aid]
                if any(-l in a.set for l in g.lits if l != x):
                    continue
                resolvent = Clause((g.set - {x}) | (a.set - {-x}))
                self._add((gid, aid), (Clause((x,)), Clause((-x,))), resolvent)
                if self.empty is not None:
                    return False
        if gid not in self.deleted:
            self._activate(gid)
        return True

    def run(self) -> RefuteResult:
        while self.empty is None:
            if self.iterations >= self.cfg.step_cap:
                return RefuteResult(RESOURCE_OUT, None, self.iterations, len(self.steps))
            if not self.step():
                break
        if self.empty is None:
            return RefuteResult(SATURATED, None, self.iterations, len(self.steps))
        return RefuteResult(PROOF, self.extract(self.empty), self.iterations, len(self.steps))

    def extract(self, target: int) -> Proof:
        """The ancestry of ``target``, renumbered consecutively after the inputs."""
        m = len(self.inputs)
        needed, todo = set(), [target]
        while todo:
            i = todo.pop()
            if i <= m or i in needed:
                continue
            needed.add(i)
            todo.extend(self.steps[i].premises)
        renumber = {i: i for i in range(1, m + 1)}
        steps = []
        for new_id, old in enumerate(sorted(needed), start=m + 1):
            renumber[old] = new_id
            st = self.steps[old]
            steps.append(ProofStep(new_id, tuple(renumber[p] for p in st.premises), st.separation, st.result))
        return Proof(self.inputs, tuple(steps))

    def partial_proof(self) -> Proof:
        return Proof(self.inputs, tuple(self.steps[i] for i in sorted(self.steps)), complete=False)


def refute(s: ClauseSet, cfg: ProverConfig | None = None) -> RefuteResult:
    return SaturationProver(s, cfg).run()
