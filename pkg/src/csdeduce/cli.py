"""Command-line interface.

Exit codes: 0 satisfiable / valid / success, 10 unsatisfiable, 20 undetermined
or resource-out, 1 usage, parse or verification error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .errors import LogicError, ParseError
from .dimacs import emit_dimacs, parse_dimacs, verdict_lines
from .kernel import is_quasi_contradiction, is_standard_contradiction
from .logic import ClauseSet
from .maximal import UNSAT, DeductionConfig, coverage, decide, find_model, maxcontra_refute
from .proof import verify_proof
from .prover import PROOF, SATURATED, ProverConfig, SaturationProver
from .trace import emit_trace, parse_trace
from .triangular import (
    brute_count_sub_contradictions,
    build_full_triangle,
    count_cn,
    count_msc,
    peel_tail,
    sub_delete,
    sub_middle,
    sub_transverse,
    sub_vertical,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNSAT = 10
EXIT_UNKNOWN = 20


def _emit(lines, out):
    for line in lines:
        print(line, file=out)


def _load(path):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    problem = parse_dimacs(text)
    for w in problem.warnings:
        print(f"c warning: {w}", file=sys.stderr)
    return problem


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def cmd_decide(args, out):
    problem = _load(args.cnf)
    s = problem.clauses
    verdict = decide(s)
    table = coverage(s)
    lines = verdict_lines(verdict.satisfiable, verdict.model, problem.nvars)
    lines.append(f"c covered {verdict.covered} of {verdict.total}")
    if verdict.satisfiable:
        uncovered = table.uncovered()
        lines.append(f"c witness {' '.join(map(str, verdict.witness.literals))} 0")
        for idx in uncovered[: args.show]:
            lines.append(f"c uncovered {' '.join(map(str, table.maximal(idx).literals))} 0")
        if len(uncovered) > args.show:
            lines.append(f"c ... {len(uncovered) - args.show} more uncovered")
    _emit(lines, out)
    if args.plot:
        from .plotting import plot_coverage

        plot_coverage(table, args.plot)
    return EXIT_OK if verdict.satisfiable else EXIT_UNSAT


def cmd_model(args, out):
    problem = _load(args.cnf)
    cfg = DeductionConfig(retry_budget=args.budget, seed=args.seed)
    candidates = [_ints(c) for c in args.candidate or ()]
    model = find_model(problem.clauses, args.method, cfg, candidates)
    if model is None:
        _emit(["s UNKNOWN", f"c no model within {args.budget} maximal clauses"], out)
        return EXIT_UNKNOWN
    _emit(verdict_lines(True, model, problem.nvars), out)
    return EXIT_OK


def _write_trace(proof, args, out):
    text = emit_trace(proof)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)


def cmd_prove(args, out):
    problem = _load(args.cnf)
    s = problem.clauses
    if args.strategy == "maxcontra":
        cfg = DeductionConfig(v0_budget=args.v0_budget, seed=args.seed, step_cap=args.max_steps)
        result = maxcontra_refute(s, cfg)
        lines = verdict_lines(False) if result.status == UNSAT else ["s UNKNOWN"]
        lines.append(f"c status {result.status}")
        for n, r in enumerate(result.rounds, start=1):
            v0 = ",".join(map(str, r.v0))
            lines.append(f"c round {n} V0 {v0} step {r.step_id} R0 {' '.join(map(str, r.resolvent.lits)) or '#'}")
        _emit(lines, out)
        _write_trace(result.proof, args, out)
        return EXIT_UNSAT if result.status == UNSAT else EXIT_UNKNOWN
    prover = SaturationProver(s, ProverConfig(strategy=args.strategy, step_cap=args.max_steps, seed=args.seed))
    try:
        result = prover.run()
    except KeyboardInterrupt:
        _emit(["s UNKNOWN", "c interrupted"], out)
        _write_trace(prover.partial_proof(), args, out)
        return EXIT_UNKNOWN
    if result.status == PROOF:
        _emit(verdict_lines(False) + [f"c proof steps {len(result.proof.steps)}"], out)
        _write_trace(result.proof, args, out)
        return EXIT_UNSAT
    if result.status == SATURATED:
        _emit(verdict_lines(True) + ["c saturated without the empty clause"], out)
        return EXIT_OK
    _emit(["s UNKNOWN", f"c resource out after {result.iterations} given clauses"], out)
    return EXIT_UNKNOWN


def cmd_verify(args, out):
    problem = _load(args.cnf)
    proof = parse_trace(Path(args.trace).read_text(), problem.clauses.clauses)
    check = verify_proof(problem.clauses, proof)
    if check:
        _emit(["s VERIFIED", f"c steps {check.checked} refutation {'yes' if proof.refutes else 'no'}"], out)
        return EXIT_OK
    where = f" at step {check.step}" if check.step is not None else ""
    _emit(["s NOT VERIFIED", f"c {check.reason}{where}"], out)
    return EXIT_ERROR


def cmd_count(args, out):
    formula = count_cn if args.kind == "cn" else count_msc
    value = formula(args.n)
    lines = [f"{args.kind} {args.n} {value}"]
    status = EXIT_OK
    if args.brute:
        if args.kind == "cn":
            host = build_full_triangle(range(1, args.n)).clauses()
        else:
            from .maximal import generate_maximal_contradiction

            host = generate_maximal_contradiction(range(1, args.n + 1))
        brute = brute_count_sub_contradictions(host)
        lines.append(f"brute {args.n} {brute.count} rejected {brute.rejected}")
        if brute.count != value or brute.rejected:
            status = EXIT_ERROR
    _emit(lines, out)
    if args.plot:
        from .plotting import plot_counts

        ns = list(range(2, max(args.n, 2) + 1))
        msc_ns = list(range(1, min(max(args.n, 1), 6) + 1))
        plot_counts(ns, [count_cn(n) for n in ns], msc_ns, [count_msc(n) for n in msc_ns], args.plot)
    return status


def _apply_cut(tri, cut: str | None) -> ClauseSet:
    if not cut:
        return tri.clauses()
    kind, _, params = cut.partition(":")
    nums = _ints(params)
    if kind == "transverse" and len(nums) == 1:
        return sub_transverse(tri, nums[0])
    if kind == "vertical" and len(nums) == 1:
        return sub_vertical(tri, nums[0])
    if kind == "middle" and len(nums) == 2:
        return sub_middle(tri, *nums)
    if kind == "delete":
        return sub_delete(tri, nums)
    if kind == "peel":
        return peel_tail(tri).clauses
    raise LogicError(f"bad cut {cut!r}")


def cmd_triangle(args, out):
    tri = build_full_triangle(_ints(args.boundary))
    result = _apply_cut(tri, args.cut)
    sc = is_standard_contradiction(result)
    nvars = max(result.universe, default=0)
    text = emit_dimacs(result, nvars, comments=[f"standard-contradiction {'yes' if sc else 'no'}"])
    out.write(text)
    if args.plot:
        from .plotting import plot_clause_grid

        order = [abs(x) for x in tri.boundary if abs(x) in result.universe]
        plot_clause_grid(result, args.plot, title=args.cut or "full triangle", order=order)
    return EXIT_OK if sc else EXIT_ERROR


def cmd_check_sc(args, out):
    problem = _load(args.cnf)
    s = problem.clauses
    sc = not s.contains_empty() and is_standard_contradiction(s)
    qc = is_quasi_contradiction(s)
    _emit([f"c standard-contradiction {'yes' if sc else 'no'}", f"c quasi-contradiction {'yes' if qc else 'no'}"], out)
    return EXIT_OK


def _default_seed() -> int:
    try:
        return int(os.environ.get("CSDEDUCE_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csdeduce", description="Contradiction-separation deduction for CNF.")
    sub = p.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    d = sub.add_parser("decide", help="coverage verdict and witness model")
    d.add_argument("cnf")
    d.add_argument("--show", type=int, default=16, help="uncovered maximal clauses to list")
    d.add_argument("--plot", help="write a coverage map to this file")
    d.set_defaults(func=cmd_decide)

    m = sub.add_parser("model", help="search for a model with Method I, II or III")
    m.add_argument("cnf")
    m.add_argument("--method", choices=["1", "2", "3"], default="2")
    m.add_argument("--budget", type=int, default=64)
    m.add_argument("--seed", type=int, default=seed)
    m.add_argument("--candidate", action="append", help="maximal clause to try first, e.g. '1,-2,-3'")
    m.set_defaults(func=cmd_model)

    pr = sub.add_parser("prove", help="refutation search with a proof trace")
    pr.add_argument("cnf")
    pr.add_argument("--strategy", choices=["triangular", "binary", "maxcontra"], default="triangular")
    pr.add_argument("--max-steps", type=int, default=10**4)
    pr.add_argument("--v0-budget", type=int, default=3)
    pr.add_argument("--seed", type=int, default=seed)
    pr.add_argument("--out", help="write the trace here instead of stdout")
    pr.set_defaults(func=cmd_prove)

    v = sub.add_parser("verify", help="check a proof trace")
    v.add_argument("cnf")
    v.add_argument("trace")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="sub-contradiction counts CN(n) / MSC(n)")
    c.add_argument("kind", choices=["cn", "msc"])
    c.add_argument("n", type=int)
    c.add_argument("--brute", action="store_true", help="cross-check by enumeration")
    c.add_argument("--plot", help="write a growth plot to this file")
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("triangle", help="build a full triangle and optionally cut it")
    t.add_argument("--boundary", required=True, help="boundary literals, e.g. '1,2,-3'")
    t.add_argument("--cut", help="transverse:i | vertical:i | middle:h,i | delete:i,j | peel")
    t.add_argument("--plot", help="write the clause grid to this file")
    t.set_defaults(func=cmd_triangle)

    k = sub.add_parser("check-sc", help="standard- and quasi-contradiction check")
    k.add_argument("cnf")
    k.set_defaults(func=cmd_check_sc)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, LogicError, OSError, ValueError) as exc:
        print(f"c error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
