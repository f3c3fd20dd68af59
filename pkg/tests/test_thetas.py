"""Unit tests for theta functions: triple product, normalization, dissections, product forms."""

from __future__ import annotations

import pytest

from mocktheta.algebra.cyclotomic import ONE, zeta_pow
from mocktheta.algebra.series import Monomial
from mocktheta.algebra.thetas import (
    J,
    Jbar,
    Jm,
    ThetaSpec,
    evaluate_dissection,
    normalize,
    phi,
    phi_product,
    psi,
    psi_product,
    theta_j_product,
    theta_j_sum,
    theta_vanishes,
)
from mocktheta.identities.toolbox import triple_product_specs


def test_triple_product_random_specs():
    """Bilateral sum equals the product form for seeded random arguments."""
    for spec in triple_product_specs(count=8, seed=24):
        assert theta_j_sum(spec, 40) == theta_j_product(spec, 40), spec.label()


@pytest.mark.parametrize("e", [-7, -1, 0, 2, 9])
def test_triple_product_shifted_arguments(e):
    spec = ThetaSpec(Monomial(zeta_pow(5), e), 3)
    assert theta_j_sum(spec, 30) == theta_j_product(spec, 30)


def test_vanishing_theta():
    assert theta_vanishes(ThetaSpec.of(1, 0, 1))
    assert theta_vanishes(ThetaSpec.of(1, 6, 3))
    assert not theta_vanishes(ThetaSpec.of(-1, 0, 1))
    assert theta_j_product(ThetaSpec.of(1, 3, 3), 20).is_zero()
    assert theta_j_sum(ThetaSpec.of(1, 0, 1), 20).is_zero()


def test_normalize_range():
    """Prefactor times the reduced theta gives back the original."""
    for e in (-9, -1, 0, 4, 11):
        spec = ThetaSpec(Monomial(zeta_pow(3), e), 4)
        pre, base = normalize(spec)
        assert 0 <= base.arg.e < 4
        assert base.arg.c == zeta_pow(3)
        assert theta_j_sum(base, 30 - pre.e) * pre == theta_j_sum(spec, 30)


def test_quasi_periodicity():
    """j(qx;q) = -x^-1 j(x;q)."""
    x = Monomial(zeta_pow(1))
    lhs = theta_j_product(ThetaSpec(x.q_shift(1), 1), 25)
    rhs = theta_j_product(ThetaSpec(x, 1), 25) * (-x.inverse())
    assert lhs == rhs


def test_euler_product_is_j_1_3():
    assert Jm(1, 30) == J(1, 3, 30)
    assert Jm(2, 30) == J(2, 6, 30)


def test_phi_psi_products():
    assert phi(40) == phi_product(40)
    assert psi(40) == psi_product(40)
    assert phi(30) == Jbar(1, 2, 30)
    assert [phi(9).coeff(n) for n in range(10)] == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]


def test_j_1_2_and_j_1_4():
    assert J(1, 2, 30) == Jm(1, 30) ** 2 / Jm(2, 30)
    assert J(1, 4, 30) == Jm(1, 30) * Jm(4, 30) / Jm(2, 30)


@pytest.mark.parametrize("parts", [2, 3, 5])
def test_dissection(parts):
    spec = ThetaSpec(Monomial(zeta_pow(2)), 1)
    assert evaluate_dissection(spec, parts, 40) == theta_j_product(spec, 40)


def test_dissection_with_q_power_argument():
    spec = ThetaSpec(Monomial(-ONE, 1), 1)
    assert evaluate_dissection(spec, 2, 30) == theta_j_product(spec, 30)
