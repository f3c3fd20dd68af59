"""Tests for the expand expression grammar."""

from __future__ import annotations

import pytest

from mocktheta.algebra.cyclotomic import ALPHA, I, zeta_pow
from mocktheta.algebra.mock import G_rank, f_a
from mocktheta.algebra.series import Monomial, subst_q_power, twist
from mocktheta.algebra.thetas import J, Jm, ThetaSpec, psi, theta_j_product
from mocktheta.errors import ParseError
from mocktheta.expr import evaluate, parse, parse_monomial


def test_psi_exponents():
    series = evaluate(parse("psi"), 6)
    assert str(series) == "1 + q + q^3 + q^6 + O(q^7)"


def test_J_forms():
    assert evaluate(parse("J(1,2)"), 8) == J(1, 2, 8)
    assert evaluate(parse("J(3)"), 20) == Jm(3, 20)
    assert evaluate(parse("J(1,2)"), 20) == Jm(1, 20) ** 2 / Jm(2, 20)


def test_vanishing_theta():
    assert evaluate(parse("j(1,0,1)"), 10).is_zero()


def test_theta_with_monomial_argument():
    value = evaluate(parse("j(-zeta^2*q, 3)"), 25)
    assert value == theta_j_product(ThetaSpec(Monomial(-zeta_pow(2), 1), 3), 25)


def test_mock_constructors():
    assert evaluate(parse("G(i)"), 15) == G_rank(I, 15)
    assert evaluate(parse("f(sqrt2)"), 15) == f_a(zeta_pow(3) + zeta_pow(-3), 15)
    assert evaluate(parse("G(alpha, 2)"), 20) == G_rank(ALPHA, 20, modulus=2)


def test_subst_and_twist():
    assert evaluate(parse("subst(psi, 2)"), 20) == subst_q_power(psi(10), 2).truncate(20)
    assert evaluate(parse("twist(psi, -1)"), 20) == twist(psi(20), -1)


def test_arithmetic_and_laurent_terms():
    value = evaluate(parse("psi / q^2 - 3*q^(-2)"), 10)
    assert value.valuation == -2
    assert value.coeff(-2) == -2
    assert value.coeff(-1) == 1


def test_print_then_parse():
    for text in ("j(zeta*q, 2) / J(4) - 3*q^2", "-(psi)^2 + twist(phi, i)", "G(-alpha) * (1 - q)"):
        node = parse(text)
        assert evaluate(parse(str(node)), 20) == evaluate(node, 20)


def test_parse_monomial():
    assert parse_monomial("-q^3*alpha") == Monomial(-ALPHA, 3)
    assert parse_monomial("zeta^6") == Monomial(I)
    assert parse_monomial("zeta*q") == Monomial(zeta_pow(1), 1)


@pytest.mark.parametrize(
    "text, position",
    [("1 + * q", 4), ("j(q", 3), ("foo + q", 0), ("q $ 2", 2), ("J(1,2,3)", 0), ("q^x", 2)],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        evaluate(parse(text), 10)
    assert info.value.position == position


def test_parse_monomial_rejects_series():
    with pytest.raises(ParseError):
        parse_monomial("psi")
