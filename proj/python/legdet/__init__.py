"""Determinants D_p(b,c) over F_p and the objects used to study their Legendre symbols."""

from ._legdet import (
    LegdetError,
    central_trinomial_mod_p2,
    claims,
    closed_form_u_neg2_2,
    det_mod_p,
    dp_det,
    dp_matrix,
    dp_symbol,
    fermat_entry,
    inv_count,
    is_odd_prime,
    krattenthaler_det,
    legendre,
    lucas_u_exact,
    lucas_u_mod,
    predict_d11,
    predict_d22,
    primes,
    row_p_minus_1,
    trinomial_row,
    u_function,
    verify,
)

__all__ = [
    "LegdetError",
    "central_trinomial_mod_p2",
    "claims",
    "closed_form_u_neg2_2",
    "det_mod_p",
    "dp_det",
    "dp_matrix",
    "dp_symbol",
    "fermat_entry",
    "inv_count",
    "is_odd_prime",
    "krattenthaler_det",
    "legendre",
    "lucas_u_exact",
    "lucas_u_mod",
    "predict_d11",
    "predict_d22",
    "primes",
    "row_p_minus_1",
    "trinomial_row",
    "u_function",
    "verify",
]
