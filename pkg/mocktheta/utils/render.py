"""Human-readable text for cyclotomic numbers, monomials and q-series."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

from mocktheta.algebra.cyclotomic import DEGREE, SQRT2, SQRT3, CycNum

if TYPE_CHECKING:
    from mocktheta.algebra.series import Monomial, QSeries

_ROOT_NAMES = {0: "1", 3: "α", 6: "i", 8: "ω", 16: "ω²"}
_ROOT_NAMES_ASCII = {0: "1", 3: "alpha", 6: "i", 8: "omega", 16: "omega^2"}


def _frac(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _root_label(k: int, ascii_only: bool) -> str:
    names = _ROOT_NAMES_ASCII if ascii_only else _ROOT_NAMES
    if k in names:
        return names[k]
    if (k + 12) % 24 in names and k != 12:
        return "-" + names[(k + 12) % 24]
    if k == 12:
        return "-1"
    return f"zeta^{k}" if ascii_only else f"ζ^{k}"


def _times(ascii_only: bool) -> str:
    return "*" if ascii_only else "·"


def format_cyc(value: CycNum, ascii_only: bool = False) -> str:
    """Symbolic names where they match (i, ω, α, √2, √3, ζ^k), else the power-basis sum."""
    if value.is_rational():
        return _frac(value.to_fraction())
    k = value.root_index()
    if k is not None:
        return _root_label(k, ascii_only)
    for surd, square, name, ascii_name in ((SQRT2, 2, "√2", "sqrt2"), (SQRT3, 3, "√3", "sqrt3")):
        ratio = value * surd
        if ratio.is_rational():
            r = ratio.to_fraction() / square
            label = ascii_name if ascii_only else name
            if r == 1:
                return label
            if r == -1:
                return "-" + label
            return f"{_frac(r)}{_times(ascii_only)}{label}"
    parts = []
    for j, c in enumerate(value.coords):
        if not c:
            continue
        basis = "" if j == 0 else ("zeta" if ascii_only else "ζ") + ("" if j == 1 else f"^{j}")
        if j == 0:
            body = _frac(abs(c))
        elif abs(c) == 1:
            body = basis
        else:
            body = f"{_frac(abs(c))}{_times(ascii_only)}{basis}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def coords_to_strings(value: CycNum) -> list[str]:
    """Eight "p/q" strings in basis order, "0/1" for zero."""
    return [f"{c.numerator}/{c.denominator}" for c in value.coords]


def coords_from_strings(items: list[str]) -> CycNum:
    if len(items) != DEGREE:
        raise ValueError(f"expected {DEGREE} coordinates, got {len(items)}")
    return CycNum(Fraction(s) for s in items)


def _q_power(e: int, ascii_only: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "q"
    return f"q^{e}" if e > 0 else f"q^({e})"


def _coefficient_times(c: CycNum, e: int, ascii_only: bool) -> tuple[str, str]:
    """Split into (sign, body) for one term c*q^e."""
    qp = _q_power(e, ascii_only)
    text = format_cyc(c, ascii_only)
    negative = text.startswith("-") and (" + " not in text and " - " not in text)
    if negative:
        text = text[1:]
    if " + " in text or " - " in text:
        text = f"({text})"
    if not qp:
        return ("-" if negative else "+"), text
    if text == "1":
        return ("-" if negative else "+"), qp
    return ("-" if negative else "+"), f"{text}{_times(ascii_only)}{qp}"


def format_monomial(m: Monomial, ascii_only: bool = False) -> str:
    sign, body = _coefficient_times(m.c, m.e, ascii_only)
    return ("-" if sign == "-" else "") + body


def format_series(f: QSeries, ascii_only: bool = False, max_terms: int | None = None) -> str:
    """a·q^n + ... + O(q^(N+1)); ``max_terms`` elides the middle with "...". """
    tail = f"O(q^{f.order + 1})" if f.order + 1 >= 0 else f"O(q^({f.order + 1}))"
    pieces = [_coefficient_times(c, n, ascii_only) for n, c in f.terms()]
    elided = max_terms is not None and len(pieces) > max_terms
    if elided:
        pieces = pieces[:max_terms]
    if not pieces:
        return tail
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    if elided:
        text += " + ..."
    return f"{text} + {tail}"
