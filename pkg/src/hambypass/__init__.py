"""Hamiltonian bypasses, degree conditions and exhaustive theorem checks for small digraphs."""
from .conditions import Condition, ConditionReport, Witness, check_condition, parse_condition, recheck_witness
from .digraph import (
    CapabilityError,
    DegreeProfile,
    Digraph,
    DigraphError,
    DominatedPair,
    are_isomorphic,
    build_digraph,
    complete_digraph,
    degree_profile,
    directed_cycle,
    directed_path,
    dominated_nonadjacent_pairs,
    find_isomorphism,
    from_text,
    is_strong,
    to_text,
)
from .families import FamilySpec, generate, recognize_exception
from .harness import Verdict, enumerate_strong_digraphs, hunt_counterexample, run_theorem_suite, sample_digraphs
from .insertion import Partner, constructive_bypass, extend_cycle_ladder, find_partner, good_cycle_scan, multi_insert
from .search import (
    Certificate,
    SearchBudgetExceeded,
    find_cycle_of_length,
    find_dnk,
    find_ham_bypass,
    find_ham_cycle,
    find_ham_path,
    parse_certificate,
    verify_certificate,
)

__version__ = "0.1.0"
