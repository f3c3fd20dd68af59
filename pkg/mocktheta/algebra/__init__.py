"""Computational core: cyclotomic scalars, truncated q-series, thetas, mock thetas, ranks."""

from mocktheta.algebra.cyclotomic import CycNum, embed, inv, zeta_pow
from mocktheta.algebra.series import Monomial, QSeries
from mocktheta.algebra.thetas import ThetaSpec, theta_j_product, theta_j_sum

__all__ = [
    "CycNum",
    "embed",
    "inv",
    "zeta_pow",
    "Monomial",
    "QSeries",
    "ThetaSpec",
    "theta_j_product",
    "theta_j_sum",
]
