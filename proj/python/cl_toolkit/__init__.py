"""Provers, translations and game evaluation for the implicative reduction
calculi CL7 (contraction-free) and Int (CL7 + contraction)."""

from ._core import (
    CltError,
    binary_anti_instance,
    check_one_sided,
    check_proof,
    enumerate_binary_tautologies,
    enumerate_formulas,
    head,
    int_provable,
    is_binary,
    is_instance_of_binary_tautology,
    is_tautology,
    judge,
    match_instance,
    nnf,
    normalize_formula,
    normalize_sequent,
    occurrences,
    prove,
    provable_cl7,
    random_legal_run,
    relevant_formulas,
    substitute,
    to_one_sided,
    translate_proof,
)

__all__ = [
    "CltError",
    "binary_anti_instance",
    "check_one_sided",
    "check_proof",
    "enumerate_binary_tautologies",
    "enumerate_formulas",
    "head",
    "int_provable",
    "is_binary",
    "is_instance_of_binary_tautology",
    "is_tautology",
    "judge",
    "match_instance",
    "nnf",
    "normalize_formula",
    "normalize_sequent",
    "occurrences",
    "prove",
    "provable_cl7",
    "random_legal_run",
    "relevant_formulas",
    "substitute",
    "to_one_sided",
    "translate_proof",
]
