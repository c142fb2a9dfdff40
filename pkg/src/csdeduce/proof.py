"""The propositional standard-contradiction-separation (S-CS) rule, deduction
records, and an independent proof checker.

A step takes premises C_1..C_m and a kept part C_i^- of each. The kept parts
must form a standard contradiction; the derived clause is the disjunction of
the residuals C_i - C_i^-.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import EmptyClauseError, SeparationError
from .kernel import is_standard_contradiction
from .logic import Clause, ClauseSet


@dataclass(frozen=True)
class Separation:
    kept: tuple[Clause, ...]

    @classmethod
    def of(cls, *kept) -> Separation:
        return cls(tuple(k if isinstance(k, Clause) else Clause(k) for k in kept))

    def residuals(self, premises: Sequence[Clause]) -> tuple[Clause, ...]:
        """Residual C_i - C_i^- per premise; raises if the kept parts do not split the premises."""
        if len(premises) != len(self.kept):
            raise SeparationError(
                f"separation does not partition premise: {len(self.kept)} kept parts for {len(premises)} premises"
            )
        out = []
        for i, (c, k) in enumerate(zip(premises, self.kept)):
            if k.is_empty:
                raise SeparationError(f"kept part of premise {i + 1} is empty")
            if not k.set <= c.set:
                raise SeparationError(f"separation does not partition premise {i + 1}: {k} is not inside {c}")
            out.append(c - k)
        return tuple(out)


def apply_scs(premises: Sequence[Clause], sep: Separation) -> Clause:
    residuals = sep.residuals(premises)
    try:
        ok = is_standard_contradiction(sep.kept)
    except EmptyClauseError:
        ok = False
    if not ok:
        raise SeparationError("separated part is not a contradiction")
    return Clause(frozenset().union(*(r.set for r in residuals)))


@dataclass(frozen=True)
class ProofStep:
    id: int
    premises: tuple[int, ...]
    separation: Separation
    result: Clause

    @property
    def kept(self) -> tuple[Clause, ...]:
        return self.separation.kept


@dataclass(frozen=True)
class Proof:
    """Input clauses (ids 1..m) followed by derived steps.

    ``complete`` is False for a partial trace flushed on interrupt; only a
    complete proof claims a refutation.
    """

    inputs: tuple[Clause, ...]
    steps: tuple[ProofStep, ...] = ()
    complete: bool = True

    @property
    def final(self) -> Clause | None:
        if self.steps:
            return self.steps[-1].result
        return None

    @property
    def refutes(self) -> bool:
        if self.steps:
            return self.steps[-1].result.is_empty
        return any(c.is_empty for c in self.inputs)


@dataclass
class Verification:
    ok: bool
    reason: str = ""
    step: int | None = None
    checked: int = field(default=0)

    def __bool__(self):
        return self.ok


def verify_proof(s: ClauseSet, p: Proof) -> Verification:
    """Re-check every step of ``p`` against the input set ``s`` from scratch."""
    if tuple(s.clauses) != tuple(p.inputs):
        return Verification(False, "proof inputs differ from the clause set")
    known: dict[int, Clause] = {i: c for i, c in enumerate(p.inputs, start=1)}
    last = len(p.inputs)
    for n, step in enumerate(p.steps):
        if step.id <= last or step.id in known:
            return Verification(False, f"step id {step.id} is not fresh and increasing", step.id, n)
        if not step.premises:
            return Verification(False, "step has no premises", step.id, n)
        for pid in step.premises:
            if pid not in known or pid >= step.id:
                return Verification(False, f"premise {pid} does not precede step {step.id}", step.id, n)
        premises = [known[pid] for pid in step.premises]
        try:
            result = apply_scs(premises, step.separation)
        except SeparationError as exc:
            return Verification(False, str(exc), step.id, n)
        if result != step.result:
            return Verification(False, f"recorded result {step.result} differs from derived {result}", step.id, n)
        known[step.id] = result
        last = step.id
    if p.complete and not p.refutes:
        return Verification(False, "proof claims a refutation but does not end in the empty clause", None, len(p.steps))
    return Verification(True, "", None, len(p.steps))
