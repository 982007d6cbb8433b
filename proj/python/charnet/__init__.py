"""Characteristic-dependent network coding toolkit.

Constructs networks whose fractional linear solvability depends on the
characteristic of the finite field, verifies explicit codes, searches small
instances exhaustively, and evaluates the matching characteristic-dependent
linear rank inequalities.
"""

from fractions import Fraction as _Fraction

from ._core import (
    BadParamsError,
    CharDividesQError,
    FractionalCode,
    Matrix,
    NetworkSpec,
    PrimeField,
    RankInequality,
    SearchOutcome,
    Subspace,
    SubspaceAssignment,
    ZeroInverse,
    bound_n1,
    bound_n2,
    bound_n2_alt,
    build_eq0,
    build_thmeq1,
    char_divides,
    count_free_coefficients,
    decode_check,
    eval_inequality,
    explicit_n1_code,
    explicit_n2_code,
    gen_butterfly,
    gen_n1_prime,
    gen_n2_prime,
    global_transfer,
    h_cond,
    h_joint,
    intersect,
    join_copies,
    lift_joined_code,
    rref,
    search_scalar,
    solve_left,
    sum_spaces,
    validate,
    verify_solution,
    witness_eq0,
    witness_thmeq1,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def bound_fraction(which, q, k=1, n=1):
    """One of the capacity bounds as a fractions.Fraction."""
    text = {"n1": bound_n1, "n2": bound_n2, "n2alt": bound_n2_alt}[which](q, k, n)
    num, den = text.split("/")
    return _Fraction(int(num), int(den))
