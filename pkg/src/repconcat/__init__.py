"""Repeated base-b concatenations of an integer in a residue class."""
from .concat import (
    digit_length,
    digit_reverse,
    repeated_concat,
    repeated_concat_mod,
    zero_padded_concat,
)
from .modmath import (
    CapacityError,
    DomainError,
    Factorization,
    NoPrimitiveRootError,
    NotInvertibleError,
    TwoAdicDecomposition,
    discrete_log,
    factorize,
    mod_inverse,
    primitive_root,
    two_adic_decompose,
    val,
)
from .oracle import CrossCheckReport, brute_force_solve, cross_check
from .sets import EMPTY, NATURALS, Empty, Finite, Progression, SolutionSet, contains, enumerate_members, intersect
from .solver import CongruenceProblem, TraceLog, TraceStep, solve, solve_prime_power
from .vpalindrome import concat_family_check, is_v_palindrome, theorem_51_number, v

__version__ = "0.1.0"
