"""The four mock theta identities for f_a, each with the intermediate identities of its proof.

Entry 1: a^2 + b^2 = 4, parameterized by t with a = t + 1/t, b = -i(t - 1/t).
Entry 2: a^2 + ab + b^2 = 3, with a = wt + 1/(wt), b = t + 1/t, w = omega.
Entry 3: the a = 1, b = sqrt3 case of entry 1.
Entry 4: the phi-tilde identity at alpha = zeta^3, reduced to a theta-only core.
"""

from __future__ import annotations

from mocktheta.algebra.cyclotomic import ALPHA, I, OMEGA, ONE, SQRT2, SQRT3, CycNum, inv, zeta_pow
from mocktheta.algebra.mock import G_rank, appell_lerch_z1_rhs, f_a, g_mock, phi_tilde
from mocktheta.algebra.series import Monomial, QSeries, pochhammer_inf, scale, twist
from mocktheta.algebra.thetas import J, Jm, ThetaSpec, phi, psi, theta_j_product
from mocktheta.errors import GenericityError

Pair = tuple[QSeries, QSeries]

ENTRY1_SAMPLES = (Monomial(zeta_pow(1)), Monomial(zeta_pow(2)), Monomial(zeta_pow(5)))
ENTRY1_DEGENERATE = (Monomial(ONE), Monomial(-ONE), Monomial(I), Monomial(-I))
ENTRY2_SAMPLES = (Monomial(zeta_pow(1)), Monomial(zeta_pow(2)), Monomial(zeta_pow(5)))
ENTRY2_DEGENERATE = (Monomial(ONE), Monomial(OMEGA), Monomial(OMEGA**2))


def _j(c: CycNum, e: int, modulus: int, order: int) -> QSeries:
    return theta_j_product(ThetaSpec(Monomial(c, e), modulus), order)


def _neg_q(f: QSeries) -> QSeries:
    return twist(f, -ONE)


def _constant_t(t: Monomial) -> CycNum:
    if t.e != 0:
        raise GenericityError(f"entry checks take a constant t, got {t}")
    return t.c


# -- entry 1 -------------------------------------------------------------


def _entry1_t(t: Monomial) -> CycNum:
    c = _constant_t(t)
    if c**4 == ONE:
        raise GenericityError(f"t = {t} is degenerate: t^4 = 1")
    return c


def _entry1_reduced_lhs(t: CycNum, order: int) -> QSeries:
    """G(-t,-q)/(1+t) - i G(t,-q)/(1-t) + (i-1) G(it,q)/(1-it)."""
    lhs = _neg_q(G_rank(-t, order)) * inv(ONE + t)
    lhs = lhs + _neg_q(G_rank(t, order)) * (-I * inv(ONE - t))
    return lhs + G_rank(I * t, order) * ((I - 1) * inv(ONE - I * t))


def _entry1_g_form(t: CycNum, order: int) -> QSeries:
    """-t g(-t;-q) - i t g(t;-q) - (1+i) t g(it;q)."""
    value = _neg_q(g_mock(-t, order)) * (-t)
    value = value + _neg_q(g_mock(t, order)) * (-I * t)
    return value + g_mock(I * t, order) * (-(ONE + I) * t)


def entry1_reduced(order: int, t: Monomial) -> Pair:
    c = _entry1_t(t)
    rhs = Jm(4, order) ** 3 * _j(-I * c, 0, 1, order) / (Jm(2, order) ** 2 * _j(c**4, 0, 4, order))
    return _entry1_reduced_lhs(c, order), scale(-2 * (ONE + I) * c, rhs)


def entry1_parameters(t: CycNum) -> tuple[CycNum, CycNum]:
    """(a, b) = (t + 1/t, -i(t - 1/t)), so a^2 + b^2 = 4."""
    return t + inv(t), -I * (t - inv(t))


def _entry1_original(order: int, c: CycNum) -> Pair:
    a, b = entry1_parameters(c)
    lhs = _neg_q(f_a(a, order)) * ((b - a + 2) / 4)
    lhs = lhs + _neg_q(f_a(-a, order)) * ((b + a + 2) / 4)
    lhs = lhs - f_a(b, order) * (b / 2)
    rhs = Jm(4, order) / pochhammer_inf(Monomial(-ONE, 1), 2, order)
    for n in range(1, order + 1):
        rhs = rhs.mul_poly([(-b, n), (ONE, 2 * n)] if b else [(ONE, 2 * n)])
    quartic = a * a * b * b - 2
    n = 1
    while 4 * n <= order:
        rhs = rhs.div_poly([(quartic, 4 * n), (ONE, 8 * n)] if quartic else [(ONE, 8 * n)])
        n += 1
    return lhs, rhs


def entry1_original(order: int, t: Monomial) -> Pair:
    """(b-a+2)/4 f_a(-q) + (b+a+2)/4 f_-a(-q) - b/2 f_b(q) against its product side."""
    return _entry1_original(order, _entry1_t(t))


def entry1_g_form(order: int, t: Monomial) -> Pair:
    c = _entry1_t(t)
    return _entry1_reduced_lhs(c, order), _entry1_g_form(c, order)


def entry1_theta_form(order: int, t: Monomial) -> Pair:
    """The g-form collapses to J_2 J_{2,4}^2 / j(qt^2;q^2) times three theta reciprocals."""
    c = _entry1_t(t)
    front = Jm(2, order) * J(2, 4, order) ** 2 / _j(c * c, 1, 2, order)
    inner = 1 / _neg_q(_j(-c, 0, 1, order))
    inner = inner - I / _neg_q(_j(c, 0, 1, order))
    inner = inner - (ONE - I) / _j(I * c, 0, 1, order)
    return _entry1_g_form(c, order), front * inner


def entry1_numerator(order: int, t: Monomial) -> Pair:
    """j(t;-q)j(it;q) - i j(-t;-q)j(it;q) - (1-i) j(-t;-q)j(t;-q) = -2(1+i)t j(qt^2;q^4) j(q^3t^2;q^4)."""
    c = _entry1_t(t)
    j_minus = _neg_q(_j(-c, 0, 1, order))
    j_plus = _neg_q(_j(c, 0, 1, order))
    j_it = _j(I * c, 0, 1, order)
    lhs = j_plus * j_it - j_minus * j_it * I - j_minus * j_plus * (ONE - I)
    rhs = _j(c * c, 1, 4, order) * _j(c * c, 3, 4, order) * (-2 * (ONE + I) * c)
    return lhs, rhs


# -- entry 2 -------------------------------------------------------------


def _entry2_t(t: Monomial) -> CycNum:
    c = _constant_t(t)
    if c**3 == ONE:
        raise GenericityError(f"t = {t} is degenerate: t^3 = 1")
    return c


def _entry2_roots(t: CycNum) -> tuple[CycNum, CycNum, CycNum]:
    return OMEGA * t, t, OMEGA * OMEGA * t


def _entry2_g_sum(t: CycNum, order: int) -> QSeries:
    """sum over u in (wt, t, w^2 t) of G(u,q) / (u(1-u))."""
    total = QSeries.zero(order)
    for u in _entry2_roots(t):
        total = total + G_rank(u, order) * inv(u * (ONE - u))
    return total


def _entry2_theta_side(t: CycNum, order: int) -> QSeries:
    """3 J_3^3 / (J_1 j(t^3;q^3))."""
    return Jm(3, order) ** 3 * 3 / (Jm(1, order) * _j(t**3, 0, 3, order))


def entry2_reduced(order: int, t: Monomial) -> Pair:
    c = _entry2_t(t)
    return _entry2_g_sum(c, order), _entry2_theta_side(c, order)


def entry2_parameters(t: CycNum) -> tuple[CycNum, CycNum]:
    """(a, b) = (wt + 1/(wt), t + 1/t), so a^2 + ab + b^2 = 3."""
    return OMEGA * t + inv(OMEGA * t), t + inv(t)


def _entry2_product_side(a: CycNum, b: CycNum, order: int) -> QSeries:
    """3 J_3^2 / J_1 * prod 1/(1 + ab(a+b) q^3n + q^6n)."""
    value = Jm(3, order) ** 2 * 3 / Jm(1, order)
    middle = a * b * (a + b)
    n = 1
    while 3 * n <= order:
        value = value.div_poly([(middle, 3 * n), (ONE, 6 * n)] if middle else [(ONE, 6 * n)])
        n += 1
    return value


def entry2_original(order: int, t: Monomial) -> Pair:
    """(a+1) f_-a + (b+1) f_-b - (a+b-1) f_(a+b) against its product side."""
    c = _entry2_t(t)
    a, b = entry2_parameters(c)
    lhs = f_a(-a, order) * (a + 1) + f_a(-b, order) * (b + 1) - f_a(a + b, order) * (a + b - 1)
    return lhs, _entry2_product_side(a, b, order)


def entry2_g_sum(order: int, t: Monomial) -> Pair:
    """The G-sum equals g(t) + g(wt) + g(w^2 t), the 1/u terms cancelling."""
    c = _entry2_t(t)
    total = QSeries.zero(order)
    for u in _entry2_roots(c):
        total = total + g_mock(u, order)
    return _entry2_g_sum(c, order), total


def entry2_appell_sum(order: int, t: Monomial) -> Pair:
    """Summing the z = 1 Appell-Lerch form over the three roots kills the m-terms."""
    c = _entry2_t(t)
    g_total = QSeries.zero(order)
    appell_total = QSeries.zero(order)
    for u in _entry2_roots(c):
        g_total = g_total + g_mock(u, order)
        appell_total = appell_total + appell_lerch_z1_rhs(Monomial(u), order)
    return g_total, appell_total


def entry2_product_side(order: int, t: Monomial) -> Pair:
    """3 J_3^2/J_1 prod 1/(1 + ab(a+b)q^3n + q^6n) = 3 J_3^3 (1 - t^3) / (J_1 j(t^3;q^3))."""
    c = _entry2_t(t)
    a, b = entry2_parameters(c)
    return _entry2_product_side(a, b, order), _entry2_theta_side(c, order) * (ONE - c**3)


# -- entry 3 -------------------------------------------------------------


def _entry3_lhs(order: int) -> QSeries:
    """(1+sqrt3)/2 f_-1(-q) + (3+sqrt3)/6 f_1(-q) - f_sqrt3(q)."""
    lhs = _neg_q(f_a(-ONE, order)) * ((ONE + SQRT3) / 2)
    lhs = lhs + _neg_q(f_a(ONE, order)) * ((3 + SQRT3) / 6)
    return lhs - f_a(SQRT3, order)


def _entry3_psi_side(order: int) -> QSeries:
    """(2/sqrt3) psi(-q) J_4/J_6 prod 1/(1 + sqrt3 q^n + q^2n)."""
    value = _neg_q(psi(order)) * Jm(4, order) / Jm(6, order)
    for n in range(1, order + 1):
        value = value.div_poly([(SQRT3, n), (ONE, 2 * n)])
    return value * (2 * SQRT3 / 3)


def _entry3_product_side(order: int) -> QSeries:
    """(2/sqrt3) J_1 J_4^2 / J_2^2 prod (1 - sqrt3 q^n + q^2n) / (1 + q^4n + q^8n)."""
    value = Jm(1, order) * Jm(4, order) ** 2 / Jm(2, order) ** 2
    for n in range(1, order + 1):
        value = value.mul_poly([(-SQRT3, n), (ONE, 2 * n)])
    n = 1
    while 4 * n <= order:
        value = value.div_poly([(ONE, 4 * n), (ONE, 8 * n)])
        n += 1
    return value * (2 * SQRT3 / 3)


def entry3_original(order: int) -> Pair:
    return _entry3_lhs(order), _entry3_psi_side(order)


def entry3_product(order: int) -> Pair:
    return _entry3_lhs(order), _entry3_product_side(order)


def entry3_rearranged(order: int) -> Pair:
    """The product side regrouped into psi(-q) J_4 / J_6."""
    return _entry3_product_side(order), _entry3_psi_side(order)


def entry3_from_entry1(order: int) -> Pair:
    """Entry 1 at t = zeta^4, where (a, b) = (1, sqrt3)."""
    return _entry1_original(order, zeta_pow(4))


# -- entry 4 -------------------------------------------------------------

ALPHA_INV = inv(ALPHA)
ONE_MINUS_I = ONE - I


def _theta_block(order: int) -> QSeries:
    """J_2 J_{2,4}^2."""
    return Jm(2, order) * J(2, 4, order) ** 2


def _rotated(f: QSeries) -> QSeries:
    """q -> iq."""
    return twist(f, I)


def _g_alpha_coeff() -> CycNum:
    return -2 * inv(ONE + ALPHA)


def entry4_original(order: int) -> Pair:
    """(1+a)/2 phi~(iq) + (1+1/a)/2 phi~(-iq) - f_sqrt2(q) = psi(-q)(-q^2;q^4) prod 1/(1+sqrt2 q^n+q^2n) / sqrt2."""
    pt = phi_tilde(order)
    lhs = twist(pt, I) * ((ONE + ALPHA) / 2) + twist(pt, -I) * ((ONE + ALPHA_INV) / 2)
    lhs = lhs - f_a(SQRT2, order)
    rhs = _neg_q(psi(order)) * pochhammer_inf(Monomial(-ONE, 2), 4, order)
    for n in range(1, order + 1):
        rhs = rhs.div_poly([(SQRT2, n), (ONE, 2 * n)])
    return lhs, rhs * (SQRT2 / 2)


def entry4_divided(order: int) -> Pair:
    """G(i,iq) + a^-1 G(i,-iq) - 2/(1+a) G(-a,q) = sqrt2 psi(-q)(-q^2;q^4)(q;q) / j(-a;q)."""
    g_i = G_rank(I, order)
    lhs = twist(g_i, I) + twist(g_i, -I) * ALPHA_INV + G_rank(-ALPHA, order) * _g_alpha_coeff()
    rhs = _neg_q(psi(order)) * pochhammer_inf(Monomial(-ONE, 2), 4, order) * Jm(1, order)
    rhs = rhs / _j(-ALPHA, 0, 1, order)
    return lhs, rhs * SQRT2


def _entry4_rotated_lhs(order: int) -> QSeries:
    """G(i,-q) + a^-1 G(i,q) - 2/(1+a) G(-a,iq)."""
    g_i = G_rank(I, order)
    return _neg_q(g_i) + g_i * ALPHA_INV + _rotated(G_rank(-ALPHA, order)) * _g_alpha_coeff()


def _entry4_rotated_rhs(order: int) -> QSeries:
    """sqrt2 psi(-iq) (q^2;q^4) (iq;iq) / j(-a;iq)."""
    value = twist(psi(order), -I) * pochhammer_inf(Monomial(ONE, 2), 4, order)
    value = value * _rotated(Jm(1, order)) / _rotated(_j(-ALPHA, 0, 1, order))
    return value * SQRT2


def entry4_rotated(order: int) -> Pair:
    return _entry4_rotated_lhs(order), _entry4_rotated_rhs(order)


def entry4_g_at_i(order: int) -> Pair:
    """G(i,q) = -2q g(q;q^4) + (1-i) J_2 J_{2,4}^2 / (j(i;q) j(q;q^2))."""
    rhs = g_mock(Monomial(ONE, 1), order - 1, modulus=4).shift(1) * -2
    rhs = rhs + _theta_block(order) / (_j(I, 0, 1, order) * _j(ONE, 1, 2, order)) * ONE_MINUS_I
    return G_rank(I, order), rhs


def entry4_g_at_i_neg(order: int) -> Pair:
    """G(i,-q) = 2q g(-q;q^4) + (1-i) J_2 J_{2,4}^2 / (j(i;-q) j(-q;q^2))."""
    rhs = g_mock(Monomial(-ONE, 1), order - 1, modulus=4).shift(1) * 2
    denominator = _neg_q(_j(I, 0, 1, order)) * _j(-ONE, 1, 2, order)
    rhs = rhs + _theta_block(order) / denominator * ONE_MINUS_I
    return _neg_q(G_rank(I, order)), rhs


def entry4_g_at_alpha(order: int) -> Pair:
    """-2/(1+a) G(-a,q) = 2iq g(iq;q^4) - 2qa g(-iq;q^4) - 2 J_2 J_{2,4}^2 / (j(-a;q) j(-iq;q^2))."""
    rhs = g_mock(Monomial(I, 1), order - 1, modulus=4).shift(1) * (2 * I)
    rhs = rhs - g_mock(Monomial(-I, 1), order - 1, modulus=4).shift(1) * (2 * ALPHA)
    rhs = rhs - _theta_block(order) * 2 / (_j(-ALPHA, 0, 1, order) * _j(-I, 1, 2, order))
    return G_rank(-ALPHA, order) * _g_alpha_coeff(), rhs


def entry4_theta_pair(order: int) -> Pair:
    """j(a;q) j(-a;q) = (1-i) J_1^2 J_8 / J_4."""
    lhs = _j(ALPHA, 0, 1, order) * _j(-ALPHA, 0, 1, order)
    rhs = Jm(1, order) ** 2 * Jm(8, order) / Jm(4, order) * ONE_MINUS_I
    return lhs, rhs


def entry4_theta_iq(order: int) -> Pair:
    """j(-iq;q^2) = J_4^2 / J_8."""
    return _j(-I, 1, 2, order), Jm(4, order) ** 2 / Jm(8, order)


def entry4_phi_alpha(order: int) -> Pair:
    """J_2 J_{2,4}^2 / (j(-a;q) j(-iq;q^2)) = phi(q) j(a;q) / ((1-i) J_4)."""
    lhs = _theta_block(order) / (_j(-ALPHA, 0, 1, order) * _j(-I, 1, 2, order))
    rhs = phi(order) * _j(ALPHA, 0, 1, order) / Jm(4, order) * inv(ONE_MINUS_I)
    return lhs, rhs


def _phi_alpha_rotated(order: int) -> QSeries:
    """2 phi(iq) j(a;iq) / ((1-i) J_4)."""
    value = _rotated(phi(order)) * _rotated(_j(ALPHA, 0, 1, order)) / Jm(4, order)
    return value * (2 * inv(ONE_MINUS_I))


def entry4_g_at_alpha_rotated(order: int) -> Pair:
    """-2/(1+a) G(-a,iq) = -2q g(-q;q^4) + 2q a^-1 g(q;q^4) - 2 phi(iq) j(a;iq) / ((1-i) J_4)."""
    rhs = g_mock(Monomial(-ONE, 1), order - 1, modulus=4).shift(1) * -2
    rhs = rhs + g_mock(Monomial(ONE, 1), order - 1, modulus=4).shift(1) * (2 * ALPHA_INV)
    rhs = rhs - _phi_alpha_rotated(order)
    return _rotated(G_rank(-ALPHA, order)) * _g_alpha_coeff(), rhs


def entry4_theta_at_i(order: int) -> Pair:
    """j(i;q) = (1-i) j(q;q^4)."""
    return _j(I, 0, 1, order), J(1, 4, order) * ONE_MINUS_I


def _core_bracket(order: int) -> QSeries:
    """j(q;q^4) j(q;q^2) + a^-1 j(-q;q^4) j(-q;q^2)."""
    value = J(1, 4, order) * J(1, 2, order)
    return value + _j(-ONE, 1, 4, order) * _j(-ONE, 1, 2, order) * ALPHA_INV


def entry4_lhs_theta(order: int) -> Pair:
    """The rotated left side as a theta expression over J_4."""
    rhs = _core_bracket(order) / Jm(4, order) - _phi_alpha_rotated(order)
    return _entry4_rotated_lhs(order), rhs


def entry4_rhs_theta(order: int) -> Pair:
    """sqrt2 psi(-iq)(q^2;q^4)(iq;iq)/j(-a;iq) = sqrt2 J_{2,4} j(a;iq) / ((1-i) J_4)."""
    rhs = J(2, 4, order) * _rotated(_j(ALPHA, 0, 1, order)) / Jm(4, order)
    return _entry4_rotated_rhs(order), rhs * (SQRT2 * inv(ONE_MINUS_I))


def _core_lhs(order: int) -> QSeries:
    """(1-i)(bracket) - 2 phi(iq) j(a;iq)."""
    value = _core_bracket(order) * ONE_MINUS_I
    return value - _rotated(phi(order)) * _rotated(_j(ALPHA, 0, 1, order)) * 2


def entry4_core(order: int) -> Pair:
    """(1-i)(bracket) - 2 phi(iq) j(a;iq) = sqrt2 j(q^2;q^4) j(a;iq)."""
    rhs = J(2, 4, order) * _rotated(_j(ALPHA, 0, 1, order)) * SQRT2
    return _core_lhs(order), rhs


def _dissection_parts(order: int) -> tuple[QSeries, QSeries, QSeries, QSeries]:
    """U = j(-q^4;q^8), V = j(-q^8;q^8), P = j(-q^6;q^16), R = j(-q^14;q^16)."""
    return (
        _j(-ONE, 4, 8, order),
        _j(-ONE, 8, 8, order),
        _j(-ONE, 6, 16, order),
        _j(-ONE, 14, 16, order),
    )


def entry4_dissections(order: int, which: str) -> Pair:
    """Two-dissections of j(q;q^4), j(q;q^2), phi(iq) and j(a;iq)."""
    u, v, p, r = _dissection_parts(order)
    if which == "j_q_q4":
        return J(1, 4, order), p - r.shift(1)
    if which == "j_q_q2":
        return J(1, 2, order), u - v.shift(1)
    if which == "phi_iq":
        return _rotated(phi(order)), u + v.shift(1) * I
    if which == "j_alpha_iq_split":
        return _rotated(_j(ALPHA, 0, 1, order)), J(1, 4, order) - _j(-ONE, 1, 4, order) * ALPHA
    if which == "j_alpha_iq":
        return _rotated(_j(ALPHA, 0, 1, order)), p * (ONE - ALPHA) - r.shift(1) * (ONE + ALPHA)
    raise ValueError(f"unknown dissection {which!r}")


DISSECTIONS = ("j_q_q4", "j_q_q2", "phi_iq", "j_alpha_iq_split", "j_alpha_iq")


def entry4_expanded(order: int) -> Pair:
    """Core left side = (-1+sqrt2-i)(UP - q^2 VR) + (1+sqrt2+i) q (UR - VP)."""
    u, v, p, r = _dissection_parts(order)
    first = (u * p - (v * r).shift(2)) * (SQRT2 - ONE - I)
    second = (u * r - v * p).shift(1) * (ONE + SQRT2 + I)
    return _core_lhs(order), first + second


def entry4_three_term_plus(order: int) -> Pair:
    """UP - q^2 VR = j(q^2;q^4) P."""
    u, v, p, r = _dissection_parts(order)
    return u * p - (v * r).shift(2), J(2, 4, order) * p


def entry4_three_term_minus(order: int) -> Pair:
    """UR - VP = -j(q^2;q^4) R."""
    u, v, p, r = _dissection_parts(order)
    return u * r - v * p, -(J(2, 4, order) * r)
