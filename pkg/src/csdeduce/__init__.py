"""Contradiction-separation deduction for propositional clause sets."""

from .logic import (
    Assignment,
    Clause,
    ClauseSet,
    brute_force_model,
    complement,
    evaluate,
    normalize_clause,
)
from .kernel import (
    Selection,
    expand_by_clauses,
    expand_by_literal,
    is_quasi_contradiction,
    is_standard_contradiction,
    shrink_by_variable,
    sub_select,
)
from .maximal import (
    DeductionConfig,
    MaximalClause,
    coverage,
    decide,
    deduction_step,
    find_model,
    generate_maximal_contradiction,
    maxcontra_refute,
    model_from_maximal_clause,
    redundancy_process,
    satisfiable_instance,
)
from .triangular import (
    Triangle,
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
from .proof import Proof, ProofStep, Separation, apply_scs, verify_proof
from .prover import ProverConfig, find_triangular_separation, refute
from .dimacs import emit_dimacs, parse_dimacs
from .trace import emit_trace, parse_trace

__version__ = "0.1.0"
