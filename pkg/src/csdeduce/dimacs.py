"""DIMACS CNF reading/writing and solver-style verdict lines."""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable, Mapping

from .errors import ParseError
from .logic import Clause, ClauseSet


@dataclass
class ParsedProblem:
    clauses: ClauseSet
    nvars: int
    nclauses: int
    lines: tuple[int, ...] = ()  # source line where each clause ends
    warnings: list[str] = field(default_factory=list)

    @property
    def tautologies(self) -> list[int]:
        return [i for i, c in enumerate(self.clauses) if c.is_tautology]


def parse_dimacs(text: str) -> ParsedProblem:
    header = None
    clauses, lines, warnings = [], [], []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        if line[0] == "%":
            break
        if line[0] == "p":
            parts = line.split()
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno, "header")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno, "header") from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative counts in header", lineno, "header")
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno, "literal") from None
            if lit == 0:
                if not current:
                    raise ParseError("terminating 0 without any literal", lineno, "literal")
                clauses.append(Clause(current))
                lines.append(lineno)
                current = []
                continue
            if abs(lit) > header[0]:
                warnings.append(f"line {lineno}: literal {lit} exceeds declared {header[0]} variables")
                header = (abs(lit), header[1])
            current.append(lit)
    if current:
        raise ParseError("unterminated final clause", len(text.splitlines()), "clause")
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if len(clauses) != header[1]:
        warnings.append(f"header declares {header[1]} clauses, found {len(clauses)}")
    nvars = header[0]
    return ParsedProblem(ClauseSet(clauses), nvars, header[1], tuple(lines), warnings)


def emit_dimacs(s: ClauseSet, nvars: int | None = None, comments: Iterable[str] = ()) -> str:
    if s.contains_empty():
        raise ValueError("the empty clause has no DIMACS encoding here")
    nvars = max(s.universe, default=0) if nvars is None else nvars
    out = [f"c {c}" for c in comments]
    out.append(f"p cnf {nvars} {len(s)}")
    out.extend(" ".join(map(str, c.lits)) + " 0" for c in s)
    return "\n".join(out) + "\n"


def verdict_lines(satisfiable: bool | None, model: Mapping[int, bool] | None = None, nvars: int = 0) -> list[str]:
    """``s SATISFIABLE`` / ``s UNSATISFIABLE`` / ``s UNKNOWN``, plus a ``v ... 0`` model line.

    Variables up to ``nvars`` missing from the model are printed false.
    """
    if satisfiable is None:
        return ["s UNKNOWN"]
    if not satisfiable:
        return ["s UNSATISFIABLE"]
    lines = ["s SATISFIABLE"]
    if model is not None:
        top = max([nvars, *model])
        lits = [v if model.get(v, False) else -v for v in range(1, top + 1)]
        lines.append("v " + " ".join(map(str, [*lits, 0])))
    return lines


def parse_model_line(line: str) -> dict[int, bool]:
    parts = line.split()
    if not parts or parts[0] != "v" or parts[-1] != "0":
        raise ParseError(f"not a model line: {line!r}")
    return {abs(int(t)): int(t) > 0 for t in parts[1:-1]}
