"""Line-oriented proof traces.

One step per line::

    S <id> P <p1,p2,...> K <p1>:<lits> K <p2>:<lits> ... R <lits | #>

Input clauses are ids 1..m in file order. Kept parts are listed in premise
order, so a premise used twice has two K fields. ``c INCOMPLETE`` marks a
trace flushed before a refutation was found.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import ParseError
from .logic import Clause
from .proof import Proof, ProofStep, Separation

INCOMPLETE = "c INCOMPLETE"


def _lits(c: Clause, sep: str) -> str:
    return sep.join(map(str, c.lits))


def emit_step(step: ProofStep) -> str:
    parts = ["S", str(step.id), "P", ",".join(map(str, step.premises))]
    for pid, k in zip(step.premises, step.kept):
        parts += ["K", f"{pid}:{_lits(k, ',')}"]
    parts += ["R", _lits(step.result, " ") if step.result.lits else "#"]
    return " ".join(parts)


def emit_trace(p: Proof) -> str:
    lines = [emit_step(st) for st in p.steps]
    if not p.complete:
        lines.append(INCOMPLETE)
    return "".join(line + "\n" for line in lines)


def _int(tok: str, lineno: int, field: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", lineno, field) from None


def _literals(tokens: Sequence[str], lineno: int, field: str) -> Clause:
    lits = [_int(t, lineno, field) for t in tokens if t]
    if 0 in lits:
        raise ParseError("0 is not a literal", lineno, field)
    return Clause(lits)


def parse_step(line: str, lineno: int = 1) -> ProofStep:
    toks = line.split()
    if len(toks) < 6 or toks[0] != "S" or toks[2] != "P":
        raise ParseError("expected 'S <id> P <premises> ...'", lineno, "S")
    sid = _int(toks[1], lineno, "S")
    premises = tuple(_int(t, lineno, "P") for t in toks[3].split(","))
    pos = 4
    kept = []
    while pos < len(toks) and toks[pos] == "K":
        if pos + 1 >= len(toks) or ":" not in toks[pos + 1]:
            raise ParseError("expected '<premise>:<literals>'", lineno, "K")
        pid, _, body = toks[pos + 1].partition(":")
        n = len(kept)
        if n >= len(premises) or _int(pid, lineno, "K") != premises[n]:
            raise ParseError(f"kept part {n + 1} does not match premise list", lineno, "K")
        kept.append(_literals(body.split(","), lineno, "K"))
        pos += 2
    if len(kept) != len(premises):
        raise ParseError(f"{len(kept)} kept parts for {len(premises)} premises", lineno, "K")
    if pos >= len(toks) or toks[pos] != "R":
        raise ParseError("missing R field", lineno, "R")
    rest = toks[pos + 1:]
    if rest == ["#"]:
        result = Clause()
    elif not rest or "#" in rest:
        raise ParseError("result must be literals or '#'", lineno, "R")
    else:
        result = _literals(rest, lineno, "R")
    return ProofStep(sid, premises, Separation(tuple(kept)), result)


def parse_trace(text: str, inputs: Sequence[Clause] = ()) -> Proof:
    steps = []
    complete = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == INCOMPLETE:
            complete = False
            continue
        if line[0] == "c":
            continue
        steps.append(parse_step(line, lineno))
    return Proof(tuple(inputs), tuple(steps), complete)
