"""Permutation polynomials of GF(q^2) from self-conjugate-reciprocal factors."""

from .ff import (
    Element,
    FieldError,
    FieldSpec,
    LevelMismatch,
    absolute_trace,
    arith,
    build_field,
    enumerate_field,
    field_for_q,
    frobenius_q,
    is_cube_in,
    is_square,
    multiplicative_order,
    norm_q2_to_q,
    oracle_bound,
    power,
    solve_artin_schreier,
)
from .poly import Poly, ScrCertificate, conj_reverse, conjugate_lift, poly_eval, poly_ops, scr_check, scr_unit
from .mu import INFINITY, MobiusMap, MuGroup, compose_numerator, g0_permutes_mu, has_root_in_mu, mobius_inv_eval, mu_build, mu_contains

__version__ = "0.1.0"
