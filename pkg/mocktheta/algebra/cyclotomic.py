"""Exact arithmetic in Q(zeta_24), zeta = exp(2*pi*i/24).

A value is c0 + c1*zeta + ... + c7*zeta^7, reduced modulo
Phi_24(x) = x^8 - x^4 + 1. It is stored as eight integer numerators over one
positive common denominator in lowest terms, so two values are equal exactly
when their coordinates are.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np
from sympy import QQ, Poly, cyclotomic_poly, symbols

from mocktheta.errors import UnknownConstant, ZeroInverse

DEGREE = 8
ROOT_ORDER = 24

_X = symbols("x")
_PHI24 = Poly(cyclotomic_poly(ROOT_ORDER, _X), _X, domain=QQ)
_ZETA_FLOAT = np.exp(2j * np.pi * np.arange(DEGREE) / ROOT_ORDER)


def _reduce(coeffs: list[int]) -> list[int]:
    """Fold degrees >= 8 back with zeta^k = zeta^(k-4) - zeta^(k-8)."""
    for k in range(len(coeffs) - 1, DEGREE - 1, -1):
        c = coeffs[k]
        if c:
            coeffs[k - 4] += c
            coeffs[k - 8] -= c
    return coeffs[:DEGREE] + [0] * (DEGREE - len(coeffs))


def _lowest_terms(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CycNum:
    """Immutable element of Q(zeta_24)."""

    __slots__ = ("_num", "_den")

    def __init__(self, coords: Iterable[int | Fraction] = ()):
        values = [Fraction(c) for c in coords]
        den = math.lcm(*(v.denominator for v in values)) if values else 1
        num = [int(v * den) for v in values]
        num = _reduce(num) if len(num) > DEGREE else num + [0] * (DEGREE - len(num))
        self._num, self._den = _lowest_terms(num, den)

    @classmethod
    def _from_parts(cls, num: tuple[int, ...], den: int) -> CycNum:
        obj = object.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def _make(cls, num: list[int], den: int) -> CycNum:
        if den == 1:
            return cls._from_parts(tuple(num), 1)
        return cls._from_parts(*_lowest_terms(num, den))

    @classmethod
    def rational(cls, value: int | Fraction) -> CycNum:
        value = Fraction(value)
        return cls._from_parts((value.numerator,) + (0,) * (DEGREE - 1), value.denominator)

    def __reduce__(self):
        return (CycNum._from_parts, (self._num, self._den))

    # -- views -----------------------------------------------------------

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def to_complex(self) -> complex:
        """Floating image under zeta -> exp(2*pi*i/24); for sanity checks only."""
        return complex(np.dot(np.asarray(self._num, dtype=np.float64), _ZETA_FLOAT) / self._den)

    def root_index(self) -> int | None:
        """k with self == zeta^k, or None."""
        return _ROOT_INDEX.get((self._num, self._den))

    # -- arithmetic ------------------------------------------------------

    def __bool__(self) -> bool:
        return any(self._num)

    def __neg__(self) -> CycNum:
        return CycNum._from_parts(tuple(-a for a in self._num), self._den)

    def __pos__(self) -> CycNum:
        return self

    def __add__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return CycNum._make([a + b for a, b in zip(self._num, other._num)], self._den)
        da, db = self._den, other._den
        return CycNum._make([a * db + b * da for a, b in zip(self._num, other._num)], da * db)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._num, other._num
        if not any(b[1:]):
            scale = b[0]
            return CycNum._make([x * scale for x in a], self._den * other._den)
        if not any(a[1:]):
            scale = a[0]
            return CycNum._make([x * scale for x in b], self._den * other._den)
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._make(_reduce(prod), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * inv(other)

    def __rtruediv__(self, other: Scalar) -> CycNum:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * inv(self)

    def __pow__(self, k: int) -> CycNum:
        if not isinstance(k, int):
            return NotImplemented
        root = self.root_index()
        if root is not None:
            return zeta_pow(root * k)
        base = self if k >= 0 else inv(self)
        result = ONE
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycNum):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"CycNum({[str(c) for c in self.coords]})"

    def __str__(self) -> str:
        from mocktheta.utils.render import format_cyc

        return format_cyc(self)


Scalar = Union[CycNum, int, Fraction]


def _coerce(value: object) -> CycNum | None:
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum.rational(value)
    return None


def as_cyc(value: Scalar) -> CycNum:
    """Accept an int, Fraction or CycNum and return a CycNum."""
    out = _coerce(value)
    if out is None:
        raise TypeError(f"not a cyclotomic scalar: {value!r}")
    return out


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def _build_powers() -> tuple[CycNum, ...]:
    zeta = CycNum([0, 1])
    powers = [ONE]
    for _ in range(ROOT_ORDER - 1):
        powers.append(powers[-1] * zeta)
    return tuple(powers)


_POWERS = _build_powers()
_ROOT_INDEX = {(p._num, p._den): k for k, p in enumerate(_POWERS)}


def zeta_pow(k: int) -> CycNum:
    """zeta^k in the power basis; period 24, negative k allowed."""
    return _POWERS[k % ROOT_ORDER]


def add(a: Scalar, b: Scalar) -> CycNum:
    return as_cyc(a) + as_cyc(b)


def mul(a: Scalar, b: Scalar) -> CycNum:
    return as_cyc(a) * as_cyc(b)


def neg(a: Scalar) -> CycNum:
    return -as_cyc(a)


@lru_cache(maxsize=8192)
def _inverse_parts(num: tuple[int, ...], den: int) -> tuple[tuple[int, ...], int]:
    poly = Poly(list(reversed(num)), _X, domain=QQ)
    inverse = poly.invert(_PHI24)
    coeffs = [Fraction(int(c.p), int(c.q)) * den for c in reversed(inverse.all_coeffs())]
    out = CycNum(coeffs)
    return out._num, out._den


def inv(a: Scalar) -> CycNum:
    """Exact inverse, via polynomial inversion modulo Phi_24."""
    a = as_cyc(a)
    if a.is_zero():
        raise ZeroInverse("cannot invert 0 in Q(zeta_24)")
    root = a.root_index()
    if root is not None:
        return zeta_pow(-root)
    if a.is_rational():
        return CycNum.rational(1 / a.to_fraction())
    return CycNum._from_parts(*_inverse_parts(a._num, a._den))


I = zeta_pow(6)
OMEGA = zeta_pow(8)
ALPHA = zeta_pow(3)
SQRT2 = zeta_pow(3) + zeta_pow(-3)
SQRT3 = zeta_pow(2) + zeta_pow(-2)

NAMED_CONSTANTS: dict[str, CycNum] = {
    "i": I,
    "omega": OMEGA,
    "alpha": ALPHA,
    "sqrt2": SQRT2,
    "sqrt3": SQRT3,
    "zeta": zeta_pow(1),
}

_ALIASES = {"I": "i", "ω": "omega", "α": "alpha", "√2": "sqrt2", "√3": "sqrt3", "ζ": "zeta"}
_ZETA_POWER = re.compile(r"(?:zeta|ζ)\s*\^\s*\(?\s*([+-]?\d+)\s*\)?")


def embed(name: str) -> CycNum:
    """Cyclotomic representative of a named constant: i, omega, alpha, sqrt2, sqrt3, zeta^k."""
    key = name.strip()
    key = _ALIASES.get(key, key)
    if key in NAMED_CONSTANTS:
        return NAMED_CONSTANTS[key]
    match = _ZETA_POWER.fullmatch(key)
    if match:
        return zeta_pow(int(match.group(1)))
    raise UnknownConstant(f"unknown constant: {name!r}")
