import itertools
import random

import pytest

from csdeduce.errors import CapacityError, NotAWitness, NotRefutationCovering
from csdeduce.kernel import is_standard_contradiction
from csdeduce.logic import Clause, ClauseSet, evaluate
from csdeduce.maximal import (
    SAT,
    UNDETERMINED,
    UNSAT,
    DeductionConfig,
    MaximalClause,
    check_witness,
    coverage,
    decide,
    deduction_step,
    find_model,
    generate_maximal_contradiction,
    maxcontra_refute,
    model_from_maximal_clause,
    plan_deduction,
    redundancy_process,
    satisfiable_instance,
    unit_rule,
)
from csdeduce.proof import verify_proof
from gen import SIX_UNSAT, FOUR_SAT, CHAIN_SAT, CYCLE_SAT


def test_maximal_clause_index_encoding():
    d = MaximalClause.from_literals([1, -2, 3], [1, 2, 3])
    assert d.index == 0b101
    assert d.literals == (1, -2, 3)
    assert d.negation().literals == (-1, 2, -3)
    assert d.contains(Clause([1, 3]))
    assert not d.contains(Clause([2]))
    assert MaximalClause((1, 2, 3), 5) == d


def test_generate_single_variable():
    assert generate_maximal_contradiction([1]) == ClauseSet.of([-1], [1])


def test_generate_three_variables_is_every_sign_pattern():
    s = generate_maximal_contradiction([1, 2, 3])
    expected = {Clause(v * s for v, s in zip((1, 2, 3), signs)) for signs in itertools.product((1, -1), repeat=3)}
    assert s.as_set() == expected
    assert [MaximalClause.from_literals(c.lits, (1, 2, 3)).index for c in s] == list(range(8))


def test_generate_cap():
    with pytest.raises(CapacityError, match="maximal contradiction too large to materialize"):
        generate_maximal_contradiction(range(1, 18))


def test_coverage_single_clause():
    table = coverage(ClauseSet.of([1, 2], [3, -3]), universe=[1, 2, 3])
    assert table.count == 2


def test_coverage_reference_sets():
    assert coverage(SIX_UNSAT).total
    table = coverage(FOUR_SAT)
    assert table.count == 14
    assert {table.maximal(int(i)).clause() for i in table.uncovered()} == {
        Clause([1, 2, -3, -4]),
        Clause([1, -2, 3, 4]),
    }


def test_coverage_with_empty_clause_marks_everything():
    assert coverage(ClauseSet.of([1, 2], [])).total


def test_coverage_cap():
    with pytest.raises(CapacityError, match="universe too large"):
        coverage(ClauseSet.of(range(1, 26)))


def test_decide():
    assert decide(SIX_UNSAT).tag == UNSAT
    v = decide(FOUR_SAT)
    assert v.tag == SAT
    assert v.witness.clause() == Clause([1, 2, -3, -4])
    assert evaluate(FOUR_SAT, v.model)
    assert decide(ClauseSet()).tag == SAT


@pytest.mark.parametrize(
    "lits, model",
    [
        ([1, -2, 3], {1: False, 2: True, 3: False}),
        ([1, -2, -3], {1: False, 2: True, 3: True}),
        ([1, 2, 3, 4], {1: False, 2: False, 3: False, 4: False}),
    ],
)
def test_model_from_maximal_clause(lits, model):
    d = MaximalClause.from_literals(lits)
    assert dict(model_from_maximal_clause(d)) == model


def test_satisfiable_instance():
    d = MaximalClause.from_literals([1, -2, 3])
    assert satisfiable_instance(CHAIN_SAT, d) == [2, 2, -3]
    assert satisfiable_instance(ClauseSet.of([1]), MaximalClause.from_literals([-1])) == [1]
    with pytest.raises(NotAWitness, match="maximal clause is expandable; not a witness"):
        satisfiable_instance(CHAIN_SAT, MaximalClause.from_literals([1, 2, 3]))


def test_satisfiable_instance_on_lowest_witness():
    d = decide(FOUR_SAT).witness
    inst = satisfiable_instance(FOUR_SAT, d)
    model = model_from_maximal_clause(d)
    assert not any(-l in inst for l in inst)
    assert all(model[abs(l)] == (l > 0) for l in inst)


def test_method_one_with_seeded_candidate():
    model = find_model(CHAIN_SAT, "I", DeductionConfig(retry_budget=1), [[1, -2, 3]])
    assert dict(model) == {1: False, 2: True, 3: False}


def test_method_two_with_seeded_candidate():
    model = find_model(CYCLE_SAT, "II", DeductionConfig(retry_budget=1), [[1, -2, -3]])
    assert dict(model) == {1: False, 2: True, 3: True}


@pytest.mark.parametrize("method", ["I", "II", "III"])
def test_no_model_for_unsat(method):
    for seed in range(5):
        assert find_model(SIX_UNSAT, method, DeductionConfig(seed=seed)) is None


def test_method_one_single_clause():
    s = ClauseSet.of([1, 2])
    for seed in range(8):
        model = find_model(s, 1, DeductionConfig(retry_budget=1, seed=seed))
        d_index = random.Random(seed).getrandbits(2)
        if d_index == 0b11:
            assert model is None
        else:
            assert model is not None and evaluate(s, model)


def test_method_three_repairs_a_failed_sweep():
    # all-negative candidate: the sweep deletes nothing containing l3, so l3 is flipped
    s = ClauseSet.of([3], [-1, -2])
    assert find_model(s, "II", DeductionConfig(retry_budget=1), [[-1, -2, -3]]) is None
    model = find_model(s, "III", DeductionConfig(retry_budget=1), [[-1, -2, -3]])
    assert model is not None and evaluate(s, model)


def test_find_model_is_deterministic():
    cfg = DeductionConfig(seed=42)
    assert find_model(FOUR_SAT, "II", cfg) == find_model(FOUR_SAT, "II", cfg)


def test_unknown_method():
    with pytest.raises(ValueError):
        find_model(FOUR_SAT, "IV")


def test_redundancy_cases():
    assert redundancy_process(ClauseSet.of([1], [-1])) == ClauseSet.of([])
    assert redundancy_process(ClauseSet.of([1, 2], [1])) == ClauseSet.of([1])
    assert redundancy_process(ClauseSet.of([1, -1], [2], [2])) == ClauseSet.of([2])


def test_unit_rule_after_adding_l4():
    s = unit_rule(SIX_UNSAT + [Clause([4])], 4)
    assert s == ClauseSet.of([1, 2], [2, 3], [-3, -1], [-2], [-2, -3], [4])


def test_deduction_step_full_v0():
    plan = plan_deduction(SIX_UNSAT, (1, 2, 3))
    assert plan.resolvent == Clause([4])
    assert is_standard_contradiction(plan.separated)
    assert deduction_step(SIX_UNSAT, (1, 2, 3)) == Clause([4])


def test_deduction_step_restricted_set():
    restricted = ClauseSet([SIX_UNSAT[0], SIX_UNSAT[1], SIX_UNSAT[5], SIX_UNSAT[4]])
    assert deduction_step(restricted, (2, 3)) == Clause([1, -4])


def test_deduction_step_unit_refutation():
    assert deduction_step(ClauseSet.of([1], [-1]), (1,)) == Clause()


def test_deduction_step_needs_covering_v0():
    with pytest.raises(NotRefutationCovering, match="V_0 not refutation-covering"):
        deduction_step(ClauseSet.of([1, 2]), (1, 2))


def test_maxcontra_refutes_six_clause_set():
    r = maxcontra_refute(SIX_UNSAT)
    assert r.status == UNSAT
    assert r.rounds[0].resolvent == Clause([4])
    assert verify_proof(SIX_UNSAT, r.proof)


def test_maxcontra_unit_pair():
    r = maxcontra_refute(ClauseSet.of([1], [-1]))
    assert r.status == UNSAT
    assert len(r.proof.steps) == 1
    assert verify_proof(ClauseSet.of([1], [-1]), r.proof)


def test_maxcontra_does_not_refute_sat():
    r = maxcontra_refute(FOUR_SAT)
    assert r.status == UNDETERMINED
    assert not r.proof.refutes


def test_check_witness():
    assert check_witness(FOUR_SAT, MaximalClause.from_literals([1, 2, -3, -4]))
    assert not check_witness(FOUR_SAT, MaximalClause.from_literals([1, 2, 3, 4]))


def test_config_validation():
    with pytest.raises(ValueError):
        DeductionConfig(v0_budget=0)
