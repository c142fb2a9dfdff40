"""Invariants checked against the truth-table and naive-enumeration oracles."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from csdeduce.dimacs import emit_dimacs, parse_dimacs
from csdeduce.kernel import (
    Selection,
    expand_by_clauses,
    expand_by_literal,
    is_quasi_contradiction,
    is_standard_contradiction,
    naive_is_standard_contradiction,
    sample_pair_free,
    shrink_by_variable,
    sub_select,
)
from csdeduce.errors import NotRefutationCovering, ShrinkError
from csdeduce.logic import Clause, ClauseSet, brute_force_model, evaluate
from csdeduce.maximal import (
    SAT,
    UNSAT,
    DeductionConfig,
    MaximalClause,
    check_witness,
    coverage,
    decide,
    find_model,
    generate_maximal_contradiction,
    maxcontra_refute,
    model_from_maximal_clause,
    plan_deduction,
    redundancy_process,
    satisfiable_instance,
)
from csdeduce.proof import verify_proof
from csdeduce.prover import PROOF, SATURATED, ProverConfig, refute
from csdeduce.trace import emit_trace, parse_trace
from gen import clause_sets, clauses, contradictions

common = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def entails(s: ClauseSet, c: Clause) -> bool:
    return brute_force_model(s + [Clause([-l]) for l in c.lits]) is None


@common
@given(clause_sets())
def test_standard_iff_quasi(s):
    assert is_standard_contradiction(s) == is_quasi_contradiction(s)
    assert is_standard_contradiction(s) == naive_is_standard_contradiction(s)


@common
@given(clause_sets(), st.randoms(use_true_random=False))
def test_standard_is_order_independent(s, rnd):
    shuffled = list(s)
    rnd.shuffle(shuffled)
    assert is_standard_contradiction(ClauseSet(shuffled)) == is_standard_contradiction(s)


@common
@given(contradictions(), st.data())
def test_sub_selections_stay_standard(s, data):
    entries = [data.draw(st.lists(st.sampled_from(c.lits), min_size=1, unique=True)) for c in s]
    assert is_standard_contradiction(sub_select(s, Selection.of(*entries)))


@common
@given(st.integers(1, 3), st.data())
def test_sub_selections_of_maximal_contradictions_stay_standard(n, data):
    s = generate_maximal_contradiction(range(1, n + 1))
    entries = [
        data.draw(st.lists(st.sampled_from(c.lits), min_size=1, unique=True)) for c in s
    ]
    assert is_standard_contradiction(sub_select(s, Selection.of(*entries)))


@common
@given(contradictions(), st.sampled_from([1, -1, 2, -2, 3, -3, 5]))
def test_expand_by_literal_preserves_contradiction(s, lit):
    assert is_standard_contradiction(expand_by_literal(s, lit))


@common
@given(contradictions(), clause_sets(max_var=5, max_clauses=3, min_clauses=0))
def test_expand_by_clauses_preserves_contradiction(s, extra):
    assert is_standard_contradiction(expand_by_clauses(s, extra))


@common
@given(contradictions(), st.integers(1, 3))
def test_shrink_preserves_contradiction_or_empties(s, v):
    try:
        out = shrink_by_variable(s, v)
    except ShrinkError as exc:
        assert "empties" in str(exc)
    else:
        assert is_standard_contradiction(out)


@common
@given(clauses(max_var=5, max_len=5), st.integers(0, 2))
def test_single_clause_coverage_cardinality(c, extra):
    universe = sorted(c.variables | set(range(6, 6 + extra)))
    table = coverage(ClauseSet([c]), universe=universe)
    assert table.count == 2 ** (len(universe) - len(c))


@common
@given(clause_sets())
def test_decide_matches_oracle_and_witness_is_valid(s):
    v = decide(s)
    oracle = brute_force_model(s)
    assert (v.tag == UNSAT) == (oracle is None)
    if v.tag == SAT:
        assert not any(v.witness.contains(c) for c in s)
        assert evaluate(s, model_from_maximal_clause(v.witness))
        assert check_witness(s, v.witness)
        inst = satisfiable_instance(s, v.witness)
        assert not any(-l in inst for l in inst)
    else:
        assert len(coverage(s).uncovered()) == 0


@common
@given(st.integers(1, 4), st.data())
def test_all_maximal_clause_sets(n, data):
    universe = list(range(1, n + 1))
    indices = data.draw(st.lists(st.integers(0, 2**n - 1), min_size=1, max_size=2**n + 2))
    s = ClauseSet(MaximalClause(tuple(universe), i).clause() for i in indices)
    expected_unsat = len(set(indices)) == 2**n
    assert (decide(s).tag == UNSAT) == expected_unsat


@common
@given(clause_sets(), st.sampled_from(["I", "II", "III"]), st.integers(0, 2**32))
def test_find_model_is_sound(s, method, seed):
    model = find_model(s, method, DeductionConfig(retry_budget=16, seed=seed))
    if model is not None:
        assert evaluate(s, model)
    if brute_force_model(s) is None:
        assert model is None


@common
@given(clause_sets(max_clauses=8))
def test_redundancy_preserves_satisfiability(s):
    out = redundancy_process(s)
    assert (brute_force_model(out) is None) == (brute_force_model(s) is None)
    for c in out:
        assert not c.is_tautology


@common
@given(clause_sets(max_clauses=8), st.data())
def test_deduction_result_is_entailed(s, data):
    v0 = data.draw(st.lists(st.sampled_from(s.variables), min_size=1, max_size=3, unique=True))
    try:
        plan = plan_deduction(s, v0)
    except NotRefutationCovering:
        return
    assert is_standard_contradiction(plan.separated)
    assert entails(s, plan.resolvent)


@common
@given(clause_sets(max_clauses=8))
def test_maxcontra_is_sound(s):
    r = maxcontra_refute(s, DeductionConfig(step_cap=50))
    assert verify_proof(s, r.proof)
    if r.status == UNSAT:
        assert brute_force_model(s) is None


@common
@given(clause_sets(max_var=5, max_clauses=10), st.sampled_from(["triangular", "binary"]))
def test_refute_agrees_with_oracle_and_proofs_verify(s, strategy):
    r = refute(s, ProverConfig(strategy=strategy))
    unsat = brute_force_model(s) is None
    assert r.status == (PROOF if unsat else SATURATED)
    if r.proof is not None:
        assert verify_proof(s, r.proof)
        known = dict(enumerate(s, start=1))
        for step in r.proof.steps:
            assert entails(ClauseSet(known[p] for p in step.premises), step.result)
            known[step.id] = step.result
        back = parse_trace(emit_trace(r.proof), s.clauses)
        assert back == r.proof


@common
@given(clause_sets(max_var=9, max_clauses=12, max_len=5, min_clauses=0))
def test_dimacs_round_trip(s):
    text = emit_dimacs(s)
    parsed = parse_dimacs(text)
    assert parsed.clauses == s
    assert emit_dimacs(parsed.clauses, parsed.nvars) == text


def test_sample_agrees_with_exhaustive_on_random_sets():
    rng = random.Random(3)
    for _ in range(50):
        s = ClauseSet.of(*[[rng.choice([v, -v]) for v in rng.sample(range(1, 4), rng.randint(1, 3))] for _ in range(4)])
        if is_standard_contradiction(s):
            assert sample_pair_free(s, 200, rng) == 0
