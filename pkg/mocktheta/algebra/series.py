"""Truncated Laurent series in q over Q(zeta_24) with precision tracking.

A QSeries stores the coefficients of q^v, q^(v+1), ..., q^N where v is the
valuation and N the order: every coefficient with exponent <= N is exact,
nothing is claimed beyond N. The zero series keeps its order and has
valuation N + 1.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from mocktheta.algebra.cyclotomic import ONE, ZERO, CycNum, Scalar, as_cyc, inv
from mocktheta.errors import NegativeExponent, NonInvertible, PoleAtFactor, PrecisionError

logger = logging.getLogger(__name__)

# (coefficient, exponent) pairs describing 1 + sum c*q^d with every d > 0
PolyTerms = Sequence[tuple[CycNum, int]]


@dataclass(frozen=True)
class Monomial:
    """c * q^e with c a nonzero cyclotomic number."""

    c: CycNum
    e: int = 0

    def __post_init__(self):
        c = as_cyc(self.c)
        if c.is_zero():
            raise ValueError("Monomial coefficient must be nonzero")
        object.__setattr__(self, "c", c)

    def __mul__(self, other: Monomial | Scalar) -> Monomial:
        if isinstance(other, Monomial):
            return Monomial(self.c * other.c, self.e + other.e)
        return Monomial(self.c * as_cyc(other), self.e)

    __rmul__ = __mul__

    def __truediv__(self, other: Monomial | Scalar) -> Monomial:
        if isinstance(other, Monomial):
            return self * other.inverse()
        return Monomial(self.c / as_cyc(other), self.e)

    def __neg__(self) -> Monomial:
        return Monomial(-self.c, self.e)

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.c**k, self.e * k)

    def inverse(self) -> Monomial:
        return Monomial(inv(self.c), -self.e)

    def q_shift(self, k: int) -> Monomial:
        """Multiply by q^k."""
        return Monomial(self.c, self.e + k)

    def to_series(self, order: int) -> QSeries:
        return QSeries.monomial(self.c, self.e, order)

    def label(self) -> str:
        from mocktheta.utils.render import format_monomial

        return format_monomial(self, ascii_only=True)

    def __str__(self) -> str:
        from mocktheta.utils.render import format_monomial

        return format_monomial(self)


def _coerce_monomial(value: Monomial | Scalar) -> Monomial:
    return value if isinstance(value, Monomial) else Monomial(as_cyc(value), 0)


class QSeries:
    """Immutable truncated Laurent series; see module docstring for the precision contract."""

    __slots__ = ("_v", "_order", "_c")

    def __init__(self, valuation: int, coeffs: Sequence[Scalar], order: int):
        values = [as_cyc(c) for c in coeffs]
        self._set(valuation, values, order)

    def _set(self, valuation: int, values: list[CycNum], order: int) -> None:
        keep = order - valuation + 1
        if keep < len(values):
            values = values[: max(keep, 0)]
        start = 0
        while start < len(values) and values[start].is_zero():
            start += 1
        if start == len(values):
            self._v, self._order, self._c = order + 1, order, ()
            return
        valuation += start
        values = values[start:]
        values.extend([ZERO] * (order - valuation + 1 - len(values)))
        self._v, self._order, self._c = valuation, order, tuple(values)

    @classmethod
    def _raw(cls, valuation: int, values: list[CycNum], order: int) -> QSeries:
        obj = object.__new__(cls)
        obj._set(valuation, values, order)
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls._raw(order + 1, [], order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> QSeries:
        return cls._raw(0, [as_cyc(c)], order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.constant(ONE, order)

    @classmethod
    def monomial(cls, c: Scalar, e: int, order: int) -> QSeries:
        return cls._raw(e, [as_cyc(c)], order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar], order: int) -> QSeries:
        """Series with the given {exponent: coefficient} entries, all others zero, to ``order``."""
        kept = {n: as_cyc(c) for n, c in terms.items() if n <= order}
        kept = {n: c for n, c in kept.items() if c}
        if not kept:
            return cls.zero(order)
        low = min(kept)
        values = [ZERO] * (order - low + 1)
        for n, c in kept.items():
            values[n - low] = c
        return cls._raw(low, values, order)

    # -- views -----------------------------------------------------------

    @property
    def valuation(self) -> int:
        return self._v

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[CycNum, ...]:
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, n: int) -> CycNum:
        if n > self._order:
            raise PrecisionError(f"coefficient of q^{n} requested, series known to q^{self._order}")
        if n < self._v:
            return ZERO
        return self._c[n - self._v]

    __getitem__ = coeff

    def terms(self) -> Iterator[tuple[int, CycNum]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent."""
        for i, c in enumerate(self._c):
            if c:
                yield self._v + i, c

    def truncate(self, order: int) -> QSeries:
        """Forget coefficients above ``order``; never raises the stated order."""
        if order >= self._order:
            return self
        return QSeries._raw(self._v, list(self._c), order)

    def leading(self) -> CycNum:
        if self.is_zero():
            raise NonInvertible("zero series has no leading coefficient")
        return self._c[0]

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> QSeries:
        return QSeries._raw(self._v, [-c for c in self._c], self._order)

    def __pos__(self) -> QSeries:
        return self

    def __add__(self, other: QSeries | Scalar) -> QSeries:
        if not isinstance(other, QSeries):
            other = _coerce_scalar(other)
            if other is None:
                return NotImplemented
            if other.is_zero():
                return self
            other = QSeries.constant(other, self._order)
        order = min(self._order, other._order)
        if self.is_zero():
            return other.truncate(order)
        if other.is_zero():
            return self.truncate(order)
        low = min(self._v, other._v)
        if low > order:
            return QSeries.zero(order)
        values = [ZERO] * (order - low + 1)
        for series in (self, other):
            offset = series._v - low
            for i, c in enumerate(series._c[: order - series._v + 1]):
                if c:
                    values[offset + i] = values[offset + i] + c
        return QSeries._raw(low, values, order)

    __radd__ = __add__

    def __sub__(self, other: QSeries | Scalar) -> QSeries:
        if isinstance(other, QSeries):
            return self + (-other)
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> QSeries:
        return (-self) + other

    def __mul__(self, other: QSeries | Monomial | Scalar) -> QSeries:
        if isinstance(other, Monomial):
            return scale(other.c, self).shift(other.e)
        if not isinstance(other, QSeries):
            other = _coerce_scalar(other)
            if other is None:
                return NotImplemented
            return scale(other, self)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: QSeries | Monomial | Scalar) -> QSeries:
        if isinstance(other, QSeries):
            return mul(self, invert(other))
        if isinstance(other, Monomial):
            return self * other.inverse()
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return scale(inv(other), self)

    def __rtruediv__(self, other: Scalar) -> QSeries:
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return scale(other, invert(self))

    def __pow__(self, k: int) -> QSeries:
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return QSeries.one(self._order - self._v)
        base = self if k > 0 else invert(self)
        result = None
        k = abs(k)
        while k:
            if k & 1:
                result = base if result is None else mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return result

    def shift(self, k: int) -> QSeries:
        """Multiply by q^k; valuation and order both move by k."""
        if self.is_zero():
            return QSeries.zero(self._order + k)
        return QSeries._raw(self._v + k, list(self._c), self._order + k)

    # -- sparse polynomial factors ---------------------------------------

    def mul_poly(self, terms: PolyTerms) -> QSeries:
        """Multiply by 1 + sum c*q^d (every d > 0); order is unchanged."""
        if self.is_zero():
            return self
        src = self._c
        out = list(src)
        length = len(src)
        for coef, d in terms:
            if d <= 0:
                raise ValueError("mul_poly needs positive exponents")
            for n in range(d, length):
                x = src[n - d]
                if x:
                    out[n] = out[n] + coef * x
        return QSeries._raw(self._v, out, self._order)

    def div_poly(self, terms: PolyTerms) -> QSeries:
        """Divide by 1 + sum c*q^d (every d > 0); order is unchanged."""
        if self.is_zero():
            return self
        for _, d in terms:
            if d <= 0:
                raise ValueError("div_poly needs positive exponents")
        out = list(self._c)
        for n in range(len(out)):
            acc = out[n]
            for coef, d in terms:
                if n >= d:
                    y = out[n - d]
                    if y:
                        acc = acc - coef * y
            out[n] = acc
        return QSeries._raw(self._v, out, self._order)

    def mul_binomial(self, c: Scalar, d: int) -> QSeries:
        """Multiply by (1 - c*q^d)."""
        c = as_cyc(c)
        if d > 0:
            return self.mul_poly([(-c, d)])
        if d == 0:
            return scale(ONE - c, self)
        # 1 - c q^d = -c q^d (1 - c^-1 q^-d)
        return scale(-c, self.mul_poly([(-inv(c), -d)])).shift(d)

    def div_binomial(self, c: Scalar, d: int, *, label: str = "") -> QSeries:
        """Divide by (1 - c*q^d); raises PoleAtFactor when d == 0 and c == 1."""
        c = as_cyc(c)
        if d > 0:
            return self.div_poly([(-c, d)])
        if d == 0:
            if c == ONE:
                raise PoleAtFactor(f"factor (1 - q^0) vanishes{': ' + label if label else ''}")
            return scale(inv(ONE - c), self)
        # 1/(1 - c q^d) = -c^-1 q^-d / (1 - c^-1 q^-d)
        ci = inv(c)
        return scale(-ci, self.div_poly([(-ci, -d)])).shift(-d)

    # -- comparison ------------------------------------------------------

    def first_mismatch(self, other: QSeries, upto: int | None = None) -> int | None:
        """Lowest exponent <= min(orders, upto) where the two series differ, or None."""
        limit = min(self._order, other._order)
        if upto is not None:
            limit = min(limit, upto)
        low = min(self._v, other._v)
        for n in range(low, limit + 1):
            if self.coeff(n) != other.coeff(n):
                return n
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            scalar = _coerce_scalar(other)
            if scalar is None:
                return NotImplemented
            other = QSeries.constant(scalar, self._order)
        return self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"QSeries(valuation={self._v}, order={self._order}, coeffs={list(self._c)!r})"

    def __str__(self) -> str:
        from mocktheta.utils.render import format_series

        return format_series(self)


class VanishingProduct(QSeries):
    """The zero series from a Pochhammer product whose first factor is 1 - q^0."""

    __slots__ = ("start", "step")

    @classmethod
    def of(cls, start: Monomial, step: int, order: int) -> VanishingProduct:
        obj = cls._raw(order + 1, [], order)
        obj.start = start
        obj.step = step
        return obj

    @property
    def label(self) -> str:
        return f"({self.start.label()}; q^{self.step})_inf"

    def __repr__(self) -> str:
        return f"VanishingProduct({self.label}, order={self.order})"


def _coerce_scalar(value: object) -> CycNum | None:
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum.rational(value)
    return None


def add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def scale(c: Scalar, f: QSeries) -> QSeries:
    c = as_cyc(c)
    if c.is_zero() or f.is_zero():
        return QSeries.zero(f.order)
    if c == ONE:
        return f
    return QSeries._raw(f.valuation, [c * x if x else ZERO for x in f.coeffs], f.order)


def mul(f: QSeries, g: QSeries) -> QSeries:
    """Exact product; order min(N_f + v_g, N_g + v_f)."""
    order = min(f.order + g.valuation, g.order + f.valuation)
    if f.is_zero() or g.is_zero():
        return QSeries.zero(order)
    low = f.valuation + g.valuation
    length = order - low + 1
    if length <= 0:
        return QSeries.zero(order)
    acc = [ZERO] * length
    g_terms = [(j, b) for j, b in enumerate(g.coeffs[:length]) if b]
    for i, a in enumerate(f.coeffs[:length]):
        if not a:
            continue
        room = length - i
        for j, b in g_terms:
            if j >= room:
                break
            acc[i + j] = acc[i + j] + a * b
    return QSeries._raw(low, acc, order)


def invert(f: QSeries) -> QSeries:
    """Multiplicative inverse: valuation -v, order N - 2v."""
    if isinstance(f, VanishingProduct):
        raise PoleAtFactor(f"cannot invert {f.label}: its first factor is 1 - q^0")
    if f.is_zero():
        raise NonInvertible(f"series is zero up to q^{f.order}")
    v = f.valuation
    a = f.coeffs
    rel_order = f.order - v
    a0_inv = inv(a[0])
    nonzero = [(k, a[k]) for k in range(1, len(a)) if a[k]]
    b = [a0_inv]
    for n in range(1, rel_order + 1):
        s = ZERO
        for k, ak in nonzero:
            if k > n:
                break
            y = b[n - k]
            if y:
                s = s + ak * y
        b.append(-(s * a0_inv) if s else ZERO)
    return QSeries._raw(-v, b, rel_order - v)


def subst_q_power(f: QSeries, k: int) -> QSeries:
    """q -> q^k; the gaps up to k*N + k - 1 are known zeros."""
    if k < 1:
        raise ValueError("subst_q_power needs k >= 1")
    order = k * f.order + (k - 1)
    if f.is_zero():
        return QSeries.zero(order)
    values = [ZERO] * (k * (len(f.coeffs) - 1) + 1)
    for i, c in enumerate(f.coeffs):
        values[k * i] = c
    return QSeries._raw(k * f.valuation, values, order)


def twist(f: QSeries, c: Scalar) -> QSeries:
    """q -> c*q, i.e. a_n -> c^n a_n; order unchanged."""
    c = as_cyc(c)
    if c.is_zero():
        raise ValueError("twist needs a nonzero scalar")
    if f.is_zero() or c == ONE:
        return f
    power = c**f.valuation
    values = []
    for x in f.coeffs:
        values.append(x * power if x else ZERO)
        power = power * c
    return QSeries._raw(f.valuation, values, f.order)


def geom_factor_inverse(m: Monomial, order: int) -> QSeries:
    """(1 - c*q^e)^-1 to the given order, as a Laurent series in q."""
    return QSeries.one(order).div_binomial(m.c, m.e, label=f"1 - ({m})").truncate(order)


def pochhammer_inf(m: Monomial, step: int, order: int) -> QSeries:
    """prod_{k>=0} (1 - c*q^(e + k*step)) truncated at ``order``."""
    if m.e < 0:
        raise NegativeExponent(f"(c q^{m.e}; q^{step}) needs a nonnegative start exponent")
    if step < 1:
        raise ValueError("pochhammer_inf needs step >= 1")
    result = QSeries.one(order)
    d = m.e
    if d == 0:
        if m.c == ONE:
            logger.debug("pochhammer factor (1 - q^0) vanishes; product is zero")
            return VanishingProduct.of(m, step, order)
        result = scale(ONE - m.c, result)
        d += step
    factors = []
    while d <= order:
        factors.append((-m.c, d))
        d += step
    for factor in factors:
        result = result.mul_poly([factor])
    return result


def at_order(build: Callable[[int], QSeries], order: int, *, max_rounds: int = 8) -> QSeries:
    """Call ``build`` at growing working orders until its result is known to ``order``."""
    work = order
    for _ in range(max_rounds):
        result = build(work)
        if result.order >= order:
            return result.truncate(order)
        logger.debug("headroom retry: asked %d, got %d", work, result.order)
        work += order - result.order
    raise PrecisionError(f"could not reach order {order} (last working order {work})")
