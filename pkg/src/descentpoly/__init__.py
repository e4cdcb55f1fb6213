"""Descent polynomials of signed multipermutations, checked by independent routes."""
from .exact_poly import (
    GuardError,
    IntPolynomial,
    QPolynomial,
    QZPolynomial,
    q_binomial,
    q_shift_factorial_in_t,
    qz_specialize,
    truncated_series_numerator,
)
from .identities import (
    CapExceeded,
    E_poly_recurrence,
    P_poly_recurrence,
    ascent_poly_bruteforce,
    ascent_poly_ehrhart,
    descent_poly_bruteforce,
    macmahon_poly_gf,
    qz_descent_poly_bruteforce,
    qz_descent_poly_gf,
    signed_descent_poly_gf,
    verify_equidistribution,
)
from .realroots import brenti_step, is_log_concave, is_real_rooted, is_unimodal, sturm_chain

__version__ = "0.1.0"
