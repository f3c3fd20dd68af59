"""Unit tests for Q(zeta_24) arithmetic."""

from __future__ import annotations

import pickle
from fractions import Fraction

import numpy as np
import pytest

from mocktheta.algebra.cyclotomic import (
    ALPHA,
    I,
    OMEGA,
    ONE,
    SQRT2,
    SQRT3,
    ZERO,
    CycNum,
    embed,
    inv,
    zeta_pow,
)
from mocktheta.errors import UnknownConstant, ZeroInverse


def _random_cyc(rng: np.random.RandomState) -> CycNum:
    nums = rng.randint(-9, 10, size=8)
    dens = rng.randint(1, 6, size=8)
    return CycNum(Fraction(int(n), int(d)) for n, d in zip(nums, dens))


def test_zeta_pow_basics():
    """zeta^0 = zeta^24 = 1 and zeta^8 reduces to zeta^4 - 1."""
    assert zeta_pow(0) == ONE
    assert zeta_pow(24) == ONE
    assert zeta_pow(8) == zeta_pow(4) - 1
    assert zeta_pow(12) == -ONE
    assert zeta_pow(-1) == zeta_pow(23)


def test_zeta_powers_multiply():
    for a in range(24):
        for b in (1, 5, 11, 23):
            assert zeta_pow(a) * zeta_pow(b) == zeta_pow(a + b)


def test_named_constants():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert ALPHA**2 == I
    assert OMEGA**3 == ONE
    assert embed("sqrt3") == SQRT3
    assert embed("zeta^5") == zeta_pow(5)
    assert embed("α") == ALPHA


def test_sqrt3_float_image():
    """Exact sqrt3 agrees with the floating value 2cos(pi/6)."""
    assert abs(SQRT3.to_complex() - 2 * np.cos(np.pi / 6)) < 1e-12


def test_embed_unknown():
    with pytest.raises(UnknownConstant):
        embed("phi_golden")


def test_inverse_examples():
    assert inv(ONE + I) == (ONE - I) / 2
    assert inv(zeta_pow(7)) == zeta_pow(-7)
    assert inv(CycNum.rational(Fraction(2, 3))) == Fraction(3, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroInverse):
        inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_inverse_random():
    """a * inv(a) = 1 for 100 pseudo-random nonzero a."""
    rng = np.random.RandomState(42)
    for _ in range(100):
        a = _random_cyc(rng)
        if a.is_zero():
            continue
        assert a * inv(a) == ONE


def test_field_axioms_random():
    rng = np.random.RandomState(7)
    for _ in range(30):
        a, b, c = _random_cyc(rng), _random_cyc(rng), _random_cyc(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + (-a) == ZERO


def test_float_image_is_homomorphism():
    rng = np.random.RandomState(3)
    for _ in range(20):
        a, b = _random_cyc(rng), _random_cyc(rng)
        assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
        assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9


def test_canonical_form():
    """Lowest terms with positive denominator; equal values hash equal."""
    a = CycNum([Fraction(2, 4), Fraction(-3, 6)])
    assert a.denominator == 2
    assert a.numerators[:2] == (1, -1)
    assert hash(CycNum.rational(3)) == hash(CycNum([3]))
    assert CycNum.rational(3) == 3


def test_pickle_round_trip():
    a = SQRT2 + Fraction(1, 3) * I
    assert pickle.loads(pickle.dumps(a)) == a


def test_str_uses_symbolic_names():
    assert str(I) == "i"
    assert str(-ONE) == "-1"
    assert str(SQRT2) == "√2"
    assert str(CycNum.rational(Fraction(3, 4))) == "3/4"
