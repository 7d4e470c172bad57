"""Rank-one DAHA special functions, affine symmetrizers and Dunkl-Bessel checks."""

from ._heckeforge import (
    affine_poincare,
    bessel_check,
    bessel_eval,
    enumerate_by_length,
    epoly,
    epoly_text_roundtrip,
    gamma,
    jackson_sum,
    looijenga_dim,
    pi_orbits,
    qhermite_bar,
    rogers,
    verify,
    worker_count,
    wrong_formula,
)

__all__ = [
    "affine_poincare",
    "bessel_check",
    "bessel_eval",
    "enumerate_by_length",
    "epoly",
    "epoly_text_roundtrip",
    "gamma",
    "jackson_sum",
    "looijenga_dim",
    "pi_orbits",
    "qhermite_bar",
    "rogers",
    "verify",
    "worker_count",
    "wrong_formula",
]
