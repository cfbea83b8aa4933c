"""Exact point-count variances for one-parameter cubic families over F_p."""

from ._core import (
    CubicvarError,
    closed_form,
    eisenstein,
    fiber_sums,
    is_prime,
    legendre,
    phi2,
    phi2_closed,
    psi3,
    psi3_closed,
    rho,
    sqrt_mod,
    two_square,
    variance,
    verify,
)

__all__ = [
    "CubicvarError",
    "closed_form",
    "eisenstein",
    "fiber_sums",
    "is_prime",
    "legendre",
    "phi2",
    "phi2_closed",
    "psi3",
    "psi3_closed",
    "rho",
    "sqrt_mod",
    "two_square",
    "variance",
    "verify",
]
