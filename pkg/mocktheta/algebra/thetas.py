"""Theta functions j(x; q^m) at monomial arguments, in product and bilateral-sum form.

j(x; q) = (x; q)_inf (q/x; q)_inf (q; q)_inf = sum_k (-1)^k q^(k(k-1)/2) x^k.
The other constructors (J_{a,m}, Jbar_{a,m}, J_m, phi, psi) are specializations.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from mocktheta.algebra.cyclotomic import ONE, ZERO, CycNum, Scalar, as_cyc, inv
from mocktheta.algebra.series import Monomial, QSeries, mul, pochhammer_inf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaSpec:
    """j(arg; q^modulus)."""

    arg: Monomial
    modulus: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("theta modulus must be >= 1")

    @classmethod
    def of(cls, c: Scalar, e: int = 0, modulus: int = 1) -> ThetaSpec:
        return cls(Monomial(as_cyc(c), e), modulus)

    def label(self) -> str:
        return f"j({self.arg.label()};q^{self.modulus})"


def theta_vanishes(spec: ThetaSpec) -> bool:
    """True iff the argument is an integral power of q^m, where j is identically zero."""
    return spec.arg.c == ONE and spec.arg.e % spec.modulus == 0


def normalize(spec: ThetaSpec) -> tuple[Monomial, ThetaSpec]:
    """Rewrite j(x; q^m) = prefactor * j(x'; q^m) with x' = c q^e', 0 <= e' < m."""
    c, e, m = spec.arg.c, spec.arg.e, spec.modulus
    pre = Monomial(ONE, 0)
    while e >= m:
        # j(x) = -(x/Q)^-1 j(x/Q)
        e -= m
        pre = pre * Monomial(-inv(c), -e)
    while e < 0:
        # j(x) = -x j(Qx)
        pre = pre * Monomial(-c, e)
        e += m
    return pre, ThetaSpec(Monomial(c, e), m)


@lru_cache(maxsize=1024)
def theta_j_product(spec: ThetaSpec, order: int) -> QSeries:
    """Triple-product form, after exponent normalization; zero series when j vanishes."""
    if theta_vanishes(spec):
        logger.debug("%s vanishes identically", spec.label())
        return QSeries.zero(order)
    pre, base = normalize(spec)
    c, e, m = base.arg.c, base.arg.e, base.modulus
    inner_order = order - pre.e
    left = pochhammer_inf(Monomial(c, e), m, inner_order)
    right = pochhammer_inf(Monomial(inv(c), m - e), m, inner_order)
    euler = pochhammer_inf(Monomial(ONE, m), m, inner_order)
    return (mul(mul(left, right), euler) * pre).truncate(order)


def _sum_exponent(k: int, e: int, m: int) -> int:
    return m * k * (k - 1) // 2 + e * k


def theta_j_sum(spec: ThetaSpec, order: int) -> QSeries:
    """Bilateral sum over every k whose exponent m*k(k-1)/2 + e*k is <= order."""
    c, e, m = spec.arg.c, spec.arg.e, spec.modulus
    apex = 0.5 - e / m
    start = math.floor(apex)
    terms: dict[int, CycNum] = {}
    ratio = -c
    k = start
    while True:
        n = _sum_exponent(k, e, m)
        if n <= order:
            terms[n] = terms.get(n, ZERO) + ratio**k
        elif k >= apex:
            break
        k += 1
    k = start - 1
    while (n := _sum_exponent(k, e, m)) <= order:
        terms[n] = terms.get(n, ZERO) + ratio**k
        k -= 1
    return QSeries.from_terms(terms, order)


def theta(c: Scalar, e: int, modulus: int, order: int) -> QSeries:
    """Shorthand for j(c q^e; q^modulus)."""
    return theta_j_product(ThetaSpec.of(c, e, modulus), order)


def J(a: int, m: int, order: int) -> QSeries:
    """J_{a,m} = j(q^a; q^m)."""
    return theta(1, a, m, order)


def Jbar(a: int, m: int, order: int) -> QSeries:
    """Jbar_{a,m} = j(-q^a; q^m)."""
    return theta(-1, a, m, order)


@lru_cache(maxsize=256)
def Jm(m: int, order: int) -> QSeries:
    """J_m = (q^m; q^m)_inf, which equals J_{m,3m}."""
    return pochhammer_inf(Monomial(ONE, m), m, order)


def phi(order: int) -> QSeries:
    """sum over all integers n of q^(n^2)."""
    terms = {0: 1}
    n = 1
    while n * n <= order:
        terms[n * n] = 2
        n += 1
    return QSeries.from_terms(terms, order)


def psi(order: int) -> QSeries:
    """sum over n >= 0 of q^(n(n+1)/2)."""
    terms = {}
    n = 0
    while n * (n + 1) // 2 <= order:
        terms[n * (n + 1) // 2] = 1
        n += 1
    return QSeries.from_terms(terms, order)


def phi_product(order: int) -> QSeries:
    """J_2^5 / (J_1^2 J_4^2)."""
    return Jm(2, order) ** 5 / (Jm(1, order) ** 2 * Jm(4, order) ** 2)


def psi_product(order: int) -> QSeries:
    """J_2^2 / J_1."""
    return Jm(2, order) ** 2 / Jm(1, order)


def m_dissection(spec: ThetaSpec, parts: int) -> list[tuple[Monomial, ThetaSpec]]:
    """j(x;q) = sum_{k<parts} (-1)^k q^(k(k-1)/2) x^k j((-1)^(parts+1) q^(parts(parts-1)/2 + parts*k) x^parts; q^(parts^2)).

    Stated in base q^M for spec modulus M; returns (prefactor, theta) pairs.
    """
    if parts < 1:
        raise ValueError("dissection needs parts >= 1")
    c, e, M = spec.arg.c, spec.arg.e, spec.modulus
    sign = ONE if parts % 2 == 1 else -ONE
    out = []
    for k in range(parts):
        pre = Monomial((-c) ** k, M * k * (k - 1) // 2 + e * k)
        inner = Monomial(sign * c**parts, M * (parts * (parts - 1) // 2 + parts * k) + e * parts)
        out.append((pre, ThetaSpec(inner, M * parts * parts)))
    return out


def evaluate_dissection(spec: ThetaSpec, parts: int, order: int) -> QSeries:
    total = QSeries.zero(order)
    for pre, inner in m_dissection(spec, parts):
        total = total + theta_j_product(inner, order - pre.e) * pre
    return total
