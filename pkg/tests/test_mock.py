"""Unit tests for g(x;q), G(x,q), f_a(q), phi-tilde and Appell-Lerch sums."""

from __future__ import annotations

from fractions import Fraction

import pytest

from mocktheta.algebra.cyclotomic import ALPHA, I, ONE, SQRT2, SQRT3, ZERO, zeta_pow
from mocktheta.algebra.mock import (
    AppellSpec,
    G_rank,
    appell_m,
    appell_window,
    f_a,
    g_appell_lerch_z1_expr,
    g_mock,
    g_quartic_rhs,
    phi_tilde,
    rank_as_f,
    rank_relation_rhs,
)
from mocktheta.algebra.series import Monomial, subst_q_power
from mocktheta.errors import NonInvertible, PoleAtFactor

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]


def test_G_at_one_counts_partitions():
    G = G_rank(ONE, 15)
    assert [G.coeff(n) for n in range(16)] == PARTITION_NUMBERS


def test_g_constant_term():
    """g(x;q) starts at 1/(1 - x)."""
    assert g_mock(-ONE, 5).coeff(0) == Fraction(1, 2)
    assert g_mock(I, 5).coeff(0) == (ONE + I) / 2


def test_rank_relation():
    """G(x,q) = (1 - x)(x g(x;q) + 1)."""
    for x in (Monomial(I), Monomial(zeta_pow(5)), Monomial(-ALPHA)):
        assert G_rank(x, 25) == rank_relation_rhs(x, 25)


@pytest.mark.parametrize("a", [SQRT2, SQRT3, ONE, -ONE, ZERO])
def test_f_as_rank(a):
    x = rank_as_f(a)
    assert x.c * x.c + a * x.c + 1 == 0
    assert f_a(a, 25) == G_rank(x, 25)


def test_rank_as_f_unknown():
    with pytest.raises(ValueError):
        rank_as_f(ONE + ONE + ONE)


def test_phi_tilde_is_f0():
    assert phi_tilde(30) == f_a(ZERO, 30)


def test_modulus_matches_substitution():
    x = Monomial(ALPHA)
    assert g_mock(x, 30, modulus=2) == subst_q_power(g_mock(x, 15), 2).truncate(30)
    assert G_rank(x, 30, modulus=3) == subst_q_power(G_rank(x, 10), 3).truncate(30)


def test_quartic_transformation_low_order():
    x = Monomial(ALPHA)
    assert g_mock(x, 15) == g_quartic_rhs(x, 15)


def test_appell_lerch_z1_low_order():
    lhs, rhs = g_appell_lerch_z1_expr(Monomial(zeta_pow(2)), 12)
    assert lhs == rhs


def test_appell_window_widening_is_stable():
    spec = AppellSpec(Monomial(zeta_pow(2)), Monomial(zeta_pow(1)), 15)
    assert appell_m(spec) == appell_m(spec, widen=2)
    assert len(appell_window(spec, widen=2)) > len(appell_window(spec))


def test_appell_pole():
    with pytest.raises(PoleAtFactor):
        appell_m(AppellSpec(Monomial(I), Monomial(-I), 10))


def test_appell_vanishing_theta():
    with pytest.raises(NonInvertible):
        appell_m(AppellSpec(Monomial(zeta_pow(1)), Monomial(ONE, 1), 10))
