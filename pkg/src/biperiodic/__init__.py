"""Exact arithmetic for bi-periodic Fibonacci and Lucas numbers, their 2x2
matrix sequences, and machine verification of the identities relating them.

Every value is an exact rational (or an exact element of Q(sqrt(D)) while a
Binet form is in flight); no floats, no tolerances.
"""

from .exact import (
    IrrationalResidue,
    Mat2,
    MismatchedDiscriminant,
    QuadElement,
    Rational,
    rational_sqrt,
)
from .identities import (
    GRID_VALUES,
    ExpectedFailure,
    IdentityCheck,
    SkipRecord,
    SuiteReport,
    default_grid,
    run_full_suite,
    thm6_iii_variant,
    thm6_suite,
    thm7_suite,
    thm8_suite,
)
from .matrixseq import (
    MatSeqTerm,
    Source,
    cassini_lucas,
    fib_matrix,
    fib_matrix_binet,
    fib_matrix_closed,
    fib_matrix_rec,
    fib_matrix_rec_iter,
    lucas_det,
    lucas_matrix,
    lucas_matrix_binet,
    lucas_matrix_closed,
    lucas_matrix_rec,
    lucas_matrix_rec_iter,
)
from .sequences import (
    BinetDegenerate,
    SeqParams,
    check_fib_from_lucas,
    check_lucas_from_fib,
    eps,
    floor_half,
    l,
    l_direct,
    q,
    q_direct,
)
from .series import (
    LaurentPoly,
    TruncatedSeries,
    expand_rational,
    finite_inverse_sum_mismatch,
    finite_inverse_sum_sides,
    first_generating_mismatch,
    first_infinite_mismatch,
    infinite_inverse_sum_series,
    inverse_sum_numerator,
    lucas_generating_series,
    lucas_partial_sum,
    verify_finite_inverse_sum,
    verify_generating_function,
    verify_infinite_inverse_sum,
    verify_partial_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BinetDegenerate",
    "ExpectedFailure",
    "GRID_VALUES",
    "IdentityCheck",
    "IrrationalResidue",
    "LaurentPoly",
    "Mat2",
    "MatSeqTerm",
    "MismatchedDiscriminant",
    "QuadElement",
    "Rational",
    "SeqParams",
    "SkipRecord",
    "Source",
    "SuiteReport",
    "TruncatedSeries",
    "cassini_lucas",
    "check_fib_from_lucas",
    "check_lucas_from_fib",
    "default_grid",
    "eps",
    "expand_rational",
    "fib_matrix",
    "fib_matrix_binet",
    "fib_matrix_closed",
    "fib_matrix_rec",
    "fib_matrix_rec_iter",
    "finite_inverse_sum_mismatch",
    "finite_inverse_sum_sides",
    "first_generating_mismatch",
    "first_infinite_mismatch",
    "floor_half",
    "infinite_inverse_sum_series",
    "inverse_sum_numerator",
    "l",
    "l_direct",
    "lucas_det",
    "lucas_generating_series",
    "lucas_matrix",
    "lucas_matrix_binet",
    "lucas_matrix_closed",
    "lucas_matrix_rec",
    "lucas_matrix_rec_iter",
    "lucas_partial_sum",
    "q",
    "q_direct",
    "rational_sqrt",
    "run_full_suite",
    "thm6_iii_variant",
    "thm6_suite",
    "thm7_suite",
    "thm8_suite",
    "verify_finite_inverse_sum",
    "verify_generating_function",
    "verify_infinite_inverse_sum",
    "verify_partial_sum",
]
