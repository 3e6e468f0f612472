"""Exact Hankel determinants, factorizations and inverses for Hilbert-type
and harmonic-number moment sequences."""

from .closed_forms import (
    generalized_det_closed, hilbert_det_closed, inverse_generalized_entry, inverse_hilbert_entry,
    inverse_hilbert_matrix, s_identity_sides, shifted_legendre,
)
from .exact_core import (
    DimensionError, Mat, Poly, Rational, SingularMatrixError, as_rational, binomial_general,
    det_oracle, format_rational, invert_oracle, poly_eval, rising_factorial,
)
from .harmonic_hankel import (
    ConjectureReport, RValue, bordered_reduction_check, conjecture_scan, harmonic_det_closed_t1,
    harmonic_det_closed_t2, harmonic_hankel_det, r_direct, r_recurrence,
)
from .moments import Family, MomentKind, UnsupportedKindError, apply_functional, harmonic_number, moment
from .stieltjes import (
    Factorization, JacobiCoeffs, factorize, hankel_det, hankel_matrix, jacobi, kernel_inverse,
    norm_squared, orthogonal_poly, orthopoly_det_oracle, triangle,
)

__version__ = "0.1.0"
