"""Theta toolbox identities: triple product, quasi-periodicity, reflection, squaring,
duplication, m-dissection and the eta-quotient product forms."""

from __future__ import annotations

import numpy as np

from mocktheta.algebra.cyclotomic import I, inv, zeta_pow
from mocktheta.algebra.series import Monomial, QSeries
from mocktheta.algebra.thetas import (
    J,
    Jbar,
    Jm,
    ThetaSpec,
    evaluate_dissection,
    phi,
    phi_product,
    psi,
    psi_product,
    theta_j_product,
    theta_j_sum,
)

Pair = tuple[QSeries, QSeries]

# ten arguments; the last three carry q-powers, x = 1 makes every side vanish
TOOLBOX_POINTS: tuple[Monomial, ...] = (
    Monomial(zeta_pow(1)),
    Monomial(zeta_pow(2)),
    Monomial(zeta_pow(3)),
    Monomial(I),
    Monomial(-zeta_pow(0)),
    Monomial(zeta_pow(5)),
    Monomial(zeta_pow(1), 1),
    Monomial(-zeta_pow(2), 2),
    Monomial(zeta_pow(7), -1),
    Monomial(zeta_pow(0)),
)

DISSECTION_POINTS: tuple[Monomial, ...] = TOOLBOX_POINTS[:3] + (TOOLBOX_POINTS[6], TOOLBOX_POINTS[8])


def triple_product_specs(count: int = 20, seed: int = 24) -> list[ThetaSpec]:
    """Seeded j(zeta^k q^e; q^m) with |e| <= 6 and m <= 6."""
    rng = np.random.RandomState(seed)
    ks = rng.randint(0, 24, size=count)
    es = rng.randint(-6, 7, size=count)
    ms = rng.randint(1, 7, size=count)
    return [ThetaSpec(Monomial(zeta_pow(int(k)), int(e)), int(m)) for k, e, m in zip(ks, es, ms)]


def _j(x: Monomial, modulus: int, order: int) -> QSeries:
    return theta_j_product(ThetaSpec(x, modulus), order)


def triple_product(order: int, spec: ThetaSpec) -> Pair:
    return theta_j_sum(spec, order), theta_j_product(spec, order)


def quasi_period(order: int, x: Monomial) -> Pair:
    """j(qx;q) = -x^-1 j(x;q)."""
    rhs = _j(x, 1, order + x.e) * Monomial(-inv(x.c), -x.e)
    return _j(x.q_shift(1), 1, order), rhs


def reflection(order: int, x: Monomial) -> Pair:
    """j(x;q) = j(q/x;q)."""
    return _j(x, 1, order), _j(x.inverse().q_shift(1), 1, order)


def square(order: int, x: Monomial) -> Pair:
    """j(x^2;q^2) = j(x;q) j(-x;q) / J_{1,2}."""
    return _j(x**2, 2, order), _j(x, 1, order) * _j(-x, 1, order) / J(1, 2, order)


def duplication(order: int, x: Monomial) -> Pair:
    """j(x;q) = J_1 j(x;q^2) j(qx;q^2) / J_2^2."""
    rhs = Jm(1, order) * _j(x, 2, order) * _j(x.q_shift(1), 2, order) / Jm(2, order) ** 2
    return _j(x, 1, order), rhs


def dissection(order: int, x: Monomial, parts: int) -> Pair:
    spec = ThetaSpec(x, 1)
    return theta_j_product(spec, order), evaluate_dissection(spec, parts, order)


def _jbar_12(order: int) -> Pair:
    return Jbar(1, 2, order), Jm(2, order) ** 5 / (Jm(1, order) ** 2 * Jm(4, order) ** 2)


def _j_12(order: int) -> Pair:
    return J(1, 2, order), Jm(1, order) ** 2 / Jm(2, order)


def _j_14(order: int) -> Pair:
    return J(1, 4, order), Jm(1, order) * Jm(4, order) / Jm(2, order)


def _phi(order: int) -> Pair:
    return phi(order), phi_product(order)


def _psi(order: int) -> Pair:
    return psi(order), psi_product(order)


def _phi_jbar(order: int) -> Pair:
    return phi(order), Jbar(1, 2, order)


def _jm(m: int):
    def build(order: int) -> Pair:
        return Jm(m, order), J(m, 3 * m, order)

    return build


PRODUCT_FORMS = {
    "jbar_1_2": _jbar_12,
    "j_1_2": _j_12,
    "j_1_4": _j_14,
    "phi": _phi,
    "phi_jbar": _phi_jbar,
    "psi": _psi,
    "jm_1": _jm(1),
    "jm_2": _jm(2),
    "jm_3": _jm(3),
}


def product_form(order: int, name: str) -> Pair:
    return PRODUCT_FORMS[name](order)
