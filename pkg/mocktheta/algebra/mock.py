"""Universal mock theta function g, the rank generating function G, f_a and Appell-Lerch sums.

Every constructor takes a base ``modulus`` M and builds the series in base q^M
directly in q, so g(-q x^-2; q^4) and friends can be evaluated at arguments whose
q-exponent is not a multiple of M.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from mocktheta.algebra.cyclotomic import (
    ALPHA,
    I,
    OMEGA,
    ONE,
    SQRT2,
    SQRT3,
    ZERO,
    Scalar,
    as_cyc,
    inv,
    zeta_pow,
)
from mocktheta.algebra.series import Monomial, QSeries, at_order, geom_factor_inverse, invert, mul
from mocktheta.algebra.thetas import Jm, ThetaSpec, theta_j_product, theta_vanishes
from mocktheta.errors import NonInvertible, PoleAtFactor

logger = logging.getLogger(__name__)


def _as_monomial(x: Monomial | Scalar) -> Monomial:
    return x if isinstance(x, Monomial) else Monomial(as_cyc(x), 0)


def g_mock(x: Monomial | Scalar, order: int, modulus: int = 1) -> QSeries:
    """g(x; q^M) = x^-1 (-1 + sum_n q^(M n^2) / ((x;q^M)_{n+1} (q^M/x;q^M)_n))."""
    x = _as_monomial(x)
    c, e, M = x.c, x.e, modulus
    ci = inv(c)
    inner = order + e
    running = QSeries.one(inner).div_binomial(c, e, label="(x;q)_{n+1} at n=0")
    total = running - 1
    n = 1
    while M * n * n <= inner:
        running = running.div_binomial(c, e + M * n, label=f"(x;q)_{{n+1}} at n={n}")
        running = running.div_binomial(ci, M - e + M * (n - 1), label=f"(q/x;q)_n at n={n}")
        running = running.truncate(inner)
        total = total + running.shift(M * n * n)
        n += 1
    return (total * ci).shift(-e).truncate(order)


def G_rank(x: Monomial | Scalar, order: int, modulus: int = 1) -> QSeries:
    """G(x, q^M) = sum_n q^(M n^2) / ((q^M x;q^M)_n (q^M/x;q^M)_n)."""
    x = _as_monomial(x)
    c, e, M = x.c, x.e, modulus
    ci = inv(c)
    running = QSeries.one(order)
    total = running
    n = 1
    while M * n * n <= order:
        running = running.div_binomial(c, e + M * n, label=f"(qx;q)_n at n={n}")
        running = running.div_binomial(ci, M * n - e, label=f"(q/x;q)_n at n={n}")
        running = running.truncate(order)
        total = total + running.shift(M * n * n)
        n += 1
    return total


def f_a(a: Scalar, order: int, modulus: int = 1) -> QSeries:
    """f_a(q^M) = sum_n q^(M n^2) / prod_{k=1..n} (1 + a q^(Mk) + q^(2Mk))."""
    a = as_cyc(a)
    M = modulus
    running = QSeries.one(order)
    total = running
    n = 1
    while M * n * n <= order:
        factor = [(ONE, 2 * M * n)]
        if a:
            factor.insert(0, (a, M * n))
        running = running.div_poly(factor)
        total = total + running.shift(M * n * n)
        n += 1
    return total


def phi_tilde(order: int) -> QSeries:
    """sum_n q^(n^2) / (-q^2; q^2)_n."""
    running = QSeries.one(order)
    total = running
    n = 1
    while n * n <= order:
        running = running.div_binomial(-1, 2 * n)
        total = total + running.shift(n * n)
        n += 1
    return total


@dataclass(frozen=True)
class AppellSpec:
    """m(x, q^modulus, z) to the given order."""

    x: Monomial
    z: Monomial
    order: int
    modulus: int = 1

    def label(self) -> str:
        return f"m({self.x.label()},q^{self.modulus},{self.z.label()})"


def _window_weight(r: int, spec: AppellSpec) -> int:
    """Valuation of the r-th term: numerator exponent plus the geometric factor's offset."""
    M = spec.modulus
    numerator = M * r * (r - 1) // 2 + spec.z.e * r
    d = M * (r - 1) + spec.x.e + spec.z.e
    return numerator + max(0, -d)


def appell_window(spec: AppellSpec, work_order: int | None = None, widen: int = 1) -> range:
    """Every r whose term can reach q^work_order; ``widen`` > 1 pads it on both sides."""
    limit = spec.order if work_order is None else work_order
    M = spec.modulus
    r = math.floor(0.5 - spec.z.e / M)
    # the term valuation is convex in r; walk down to its minimum first
    while _window_weight(r - 1, spec) < _window_weight(r, spec):
        r -= 1
    while _window_weight(r + 1, spec) < _window_weight(r, spec):
        r += 1
    if _window_weight(r, spec) > limit:
        return range(r, r)
    lo = r
    while _window_weight(lo - 1, spec) <= limit:
        lo -= 1
    hi = r
    while _window_weight(hi + 1, spec) <= limit:
        hi += 1
    pad = (widen - 1) * (hi - lo + 1)
    return range(lo - pad, hi + pad + 1)


def _check_appell_poles(spec: AppellSpec) -> None:
    cxz = spec.x.c * spec.z.c
    shift = spec.x.e + spec.z.e
    if cxz == ONE and shift % spec.modulus == 0:
        r = 1 - shift // spec.modulus
        raise PoleAtFactor(f"{spec.label()}: factor 1 - q^(r-1) x z vanishes at r={r}")


def _appell_numerator(spec: AppellSpec, work: int, widen: int) -> QSeries:
    """sum_r (-1)^r q^(M r(r-1)/2) z^r / (1 - q^(M(r-1)) x z), truncated at q^work."""
    M = spec.modulus
    cz = spec.z.c
    cxz = spec.x.c * spec.z.c
    window = appell_window(spec, work, widen)
    logger.debug("%s: window r in [%d, %d] at order %d", spec.label(), window.start, window.stop - 1, work)
    total = QSeries.zero(work)
    for r in window:
        base = M * r * (r - 1) // 2 + spec.z.e * r
        if base > work:
            continue
        factor = Monomial(cxz, M * (r - 1) + spec.x.e + spec.z.e)
        term = geom_factor_inverse(factor, work - base)
        total = total + (term * (-cz) ** r).shift(base)
    return total


def appell_m(spec: AppellSpec, widen: int = 1) -> QSeries:
    """m(x, q^M, z) = j(z; q^M)^-1 sum_r (-1)^r q^(M r(r-1)/2) z^r / (1 - q^(M(r-1)) x z)."""
    _check_appell_poles(spec)
    theta_spec = ThetaSpec(spec.z, spec.modulus)
    if theta_vanishes(theta_spec):
        raise NonInvertible(f"{spec.label()}: j(z;q^{spec.modulus}) vanishes")

    def build(work: int) -> QSeries:
        numerator = _appell_numerator(spec, work, widen)
        return mul(numerator, invert(theta_j_product(theta_spec, work)))

    return at_order(build, spec.order)


def _theta_quotient(numerators: list[ThetaSpec], denominators: list[ThetaSpec], work: int) -> QSeries:
    value = QSeries.one(work)
    for spec in numerators:
        value = mul(value, theta_j_product(spec, work))
    for spec in denominators:
        denominator = theta_j_product(spec, work)
        if denominator.is_zero():
            raise NonInvertible(f"{spec.label()} vanishes in a denominator")
        value = mul(value, invert(denominator))
    return value


def g_quartic_rhs(x: Monomial | Scalar, order: int) -> QSeries:
    """-x^-1 + q x^-3 g(-q x^-2; q^4) - q g(-q x^2; q^4) + J_2 J_{2,4}^2 / (x j(x;q) j(-q x^2;q^2))."""
    x = _as_monomial(x)
    c, e = x.c, x.e
    y_low = Monomial(-(inv(c) ** 2), 1 - 2 * e)
    y_high = Monomial(-(c**2), 1 + 2 * e)
    front = Monomial(inv(c) ** 3, 1 - 3 * e)

    def build(work: int) -> QSeries:
        value = QSeries.monomial(-inv(c), -e, work)
        value = value + g_mock(y_low, work - front.e, modulus=4) * front
        value = value - g_mock(y_high, work - 1, modulus=4).shift(1)
        quotient = _theta_quotient(
            [ThetaSpec.of(1, 2, 6), ThetaSpec.of(1, 2, 4), ThetaSpec.of(1, 2, 4)],
            [ThetaSpec(x, 1), ThetaSpec(y_high, 2)],
            work + e,
        )
        return value + quotient * x.inverse()

    return at_order(build, order)


def _appell_pair(x: Monomial, z: Monomial, work: int) -> QSeries:
    """-x^-2 m(q x^-3, q^3, z) - x^-1 m(q^2 x^-3, q^3, z)."""
    inv_x3 = x.inverse() ** 3
    first = appell_m(AppellSpec(inv_x3.q_shift(1), z, work + 2 * x.e, 3)) * (-(x.inverse() ** 2))
    second = appell_m(AppellSpec(inv_x3.q_shift(2), z, work + x.e, 3)) * (-x.inverse())
    return first + second


def appell_lerch_rhs(x: Monomial | Scalar, z: Monomial | Scalar, order: int) -> QSeries:
    """-x^-2 m(q x^-3, q^3, x^3 z) - x^-1 m(q^2 x^-3, q^3, x^3 z) + J_1^2 j(xz;q) j(z;q^3) / (j(x;q) j(z;q) j(x^3 z;q^3))."""
    x, z = _as_monomial(x), _as_monomial(z)
    x3z = (x**3) * z

    def build(work: int) -> QSeries:
        quotient = _theta_quotient(
            [ThetaSpec.of(1, 1, 3), ThetaSpec.of(1, 1, 3), ThetaSpec(x * z, 1), ThetaSpec(z, 3)],
            [ThetaSpec(x, 1), ThetaSpec(z, 1), ThetaSpec(x3z, 3)],
            work,
        )
        return _appell_pair(x, x3z, work) + quotient

    return at_order(build, order)


def appell_lerch_z1_rhs(x: Monomial | Scalar, order: int) -> QSeries:
    """The z = 1 case, whose theta part is J_3^3 / (J_1 j(x^3; q^3))."""
    x = _as_monomial(x)
    x3 = x**3

    def build(work: int) -> QSeries:
        theta_x3 = theta_j_product(ThetaSpec(x3, 3), work)
        if theta_x3.is_zero():
            raise NonInvertible(f"j({x3.label()};q^3) vanishes")
        quotient = Jm(3, work) ** 3 / mul(Jm(1, work), theta_x3)
        return _appell_pair(x, x3, work) + quotient

    return at_order(build, order)


def g_appell_lerch_expr(x: Monomial | Scalar, z: Monomial | Scalar, order: int) -> tuple[QSeries, QSeries]:
    """Both sides of g(x;q) = Appell-Lerch form at generic (x, z)."""
    return g_mock(x, order), appell_lerch_rhs(x, z, order)


def g_appell_lerch_z1_expr(x: Monomial | Scalar, order: int) -> tuple[QSeries, QSeries]:
    return g_mock(x, order), appell_lerch_z1_rhs(x, order)


def rank_relation_rhs(x: Monomial | Scalar, order: int) -> QSeries:
    """(1 - x)(x g(x;q) + 1), which equals G(x, q)."""
    x = _as_monomial(x)
    inner = order - min(x.e, 0)
    value = g_mock(x, inner - x.e) * x + 1
    return value.mul_binomial(x.c, x.e).truncate(order)


_F_ROOTS = {
    SQRT2: -ALPHA,
    SQRT3: -zeta_pow(2),
    ONE: OMEGA,
    -ONE: zeta_pow(4),
    ZERO: I,
}


def rank_as_f(a: Scalar) -> Monomial:
    """The root x of x^2 + a x + 1 with f_a(q) = G(x, q), for a in {sqrt2, sqrt3, 1, -1, 0}."""
    a = as_cyc(a)
    if a not in _F_ROOTS:
        raise ValueError(f"no catalogued root for a = {a}")
    return Monomial(_F_ROOTS[a], 0)
