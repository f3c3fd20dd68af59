"""Transformation identities for g, G and f_a, the Appell-Lerch representation,
the three-term theta relations and the rank-count oracle."""

from __future__ import annotations

from mocktheta.algebra.cyclotomic import ZERO, CycNum, inv, zeta_pow
from mocktheta.algebra.mock import (
    AppellSpec,
    G_rank,
    appell_m,
    f_a,
    g_appell_lerch_expr,
    g_appell_lerch_z1_expr,
    g_mock,
    g_quartic_rhs,
    phi_tilde,
    rank_as_f,
    rank_relation_rhs,
)
from mocktheta.algebra.partitions import rank_counts, rank_gf, specialize
from mocktheta.algebra.series import Monomial, QSeries, subst_q_power
from mocktheta.algebra.thetas import Jm, ThetaSpec, theta_j_product

Pair = tuple[QSeries, QSeries]

THREE_TERM_KINDS = ("plus", "minus")


def quartic(order: int, x: Monomial) -> Pair:
    """g(x;q) against its q^4 transformation."""
    return g_mock(x, order), g_quartic_rhs(x, order)


def appell_lerch(order: int, x: Monomial, z: Monomial) -> Pair:
    return g_appell_lerch_expr(x, z, order)


def appell_lerch_z1(order: int, x: Monomial) -> Pair:
    return g_appell_lerch_z1_expr(x, order)


def rank_relation(order: int, x: Monomial) -> Pair:
    """G(x,q) = (1 - x)(x g(x;q) + 1)."""
    return G_rank(x, order), rank_relation_rhs(x, order)


def f_as_rank(order: int, a: CycNum) -> Pair:
    """f_a(q) = G(x, q) with x + 1/x = -a."""
    return f_a(a, order), G_rank(rank_as_f(a), order)


def phi_tilde_as_f0(order: int) -> Pair:
    return phi_tilde(order), f_a(ZERO, order)


def base_change(order: int, x: Monomial, modulus: int) -> Pair:
    """g(x; q^M) built directly against g(x; q) with q -> q^M."""
    direct = g_mock(x, order, modulus=modulus)
    inner = Monomial(x.c, x.e // modulus)
    return direct, subst_q_power(g_mock(inner, order // modulus), modulus).truncate(order)


def appell_window_stability(order: int, x: Monomial, z: Monomial, modulus: int) -> Pair:
    """The Appell-Lerch sum is unchanged when its r-window is doubled."""
    spec = AppellSpec(x, z, order, modulus)
    return appell_m(spec), appell_m(spec, widen=2)


def _j(c: CycNum, e: int, modulus: int, order: int) -> QSeries:
    return theta_j_product(ThetaSpec(Monomial(c, e), modulus), order)


def three_term(order: int, which: str, x: Monomial, dilation: int = 1) -> Pair:
    """Three-term theta relations in bases q^4, q^8, with q -> q^dilation.

    plus:  j(q^2x;q^4) j(q^5x;q^8) + (q/x) j(x;q^4) j(qx;q^8) = (J_1/J_4) j(-q^3x;q^4) j(q^3x;q^8)
    minus: j(-x;q^4) j(-q^5x;q^8) - j(-q^2x;q^4) j(-qx;q^8) = x (J_1/J_4) j(q^3x;q^4) j(-q^7x;q^8)
    """
    if which not in THREE_TERM_KINDS:
        raise ValueError(f"unknown three-term relation {which!r}; expected one of {THREE_TERM_KINDS}")
    k = dilation
    c, e = x.c, x.e
    ratio = Jm(k, order) / Jm(4 * k, order)
    if which == "plus":
        front = Monomial(inv(c), k - e)
        lhs = _j(c, e + 2 * k, 4 * k, order) * _j(c, e + 5 * k, 8 * k, order)
        lhs = lhs + _j(c, e, 4 * k, order - front.e) * _j(c, e + k, 8 * k, order - front.e) * front
        rhs = ratio * _j(-c, e + 3 * k, 4 * k, order) * _j(c, e + 3 * k, 8 * k, order)
        return lhs, rhs
    lhs = _j(-c, e, 4 * k, order) * _j(-c, e + 5 * k, 8 * k, order)
    lhs = lhs - _j(-c, e + 2 * k, 4 * k, order) * _j(-c, e + k, 8 * k, order)
    rhs = ratio * _j(c, e + 3 * k, 4 * k, order - e) * _j(-c, e + 7 * k, 8 * k, order - e) * x
    return lhs, rhs


def rank_specialization(order: int, x: Monomial) -> Pair:
    """Rank polynomials from the bivariate expansion, evaluated at x, against G(x, q)."""
    return specialize(rank_gf(order), x.c), G_rank(x, order)


def rank_enumeration(order: int, x: Monomial) -> Pair:
    """Counted ranks, evaluated at x, against the bivariate expansion at x."""
    counted: dict[int, CycNum] = {}
    for n in range(order + 1):
        value = ZERO
        for m, count in rank_counts(n).items():
            value = value + (x.c**m) * count
        counted[n] = value
    return QSeries.from_terms(counted, order), specialize(rank_gf(order), x.c)


# (x, z) pairs for the Appell-Lerch representation; all generic
APPELL_PAIRS: tuple[tuple[Monomial, Monomial], ...] = (
    (Monomial(zeta_pow(2)), Monomial(zeta_pow(1))),
    (Monomial(zeta_pow(3)), Monomial(-zeta_pow(0))),
    (Monomial(zeta_pow(3)), Monomial(zeta_pow(1))),
    (Monomial(zeta_pow(1)), Monomial(zeta_pow(2))),
    (Monomial(zeta_pow(5)), Monomial(zeta_pow(6))),
)
