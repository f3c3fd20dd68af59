"""Partition enumeration and Dyson's rank: a counting oracle for G(x, q)."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from mocktheta.algebra.cyclotomic import ZERO, CycNum, Scalar, as_cyc
from mocktheta.algebra.series import QSeries
from mocktheta.errors import OutOfRange

MAX_N = 40


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) or "()"


def _check_bound(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise OutOfRange(f"n = {n} outside 0..{MAX_N}")


def _descending(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, each exactly once, largest first part first."""
    _check_bound(n)
    return [Partition(p) for p in _descending(n, n)]


def rank(p: Partition) -> int:
    """Largest part minus number of parts; 0 for the empty partition."""
    if not p.parts:
        return 0
    return p.parts[0] - len(p.parts)


def rank_counts(n: int) -> dict[int, int]:
    """m -> N(m, n) by enumeration."""
    return dict(Counter(rank(p) for p in enumerate_partitions(n)))


@dataclass(frozen=True)
class RankPolynomial:
    """Coefficient of q^n in G(x, q): sum_m N(m, n) x^m."""

    n: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.coeffs.values())

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-m, 0) == c for m, c in self.coeffs.items())

    def at(self, x: Scalar) -> CycNum:
        """Value at x = c (a nonzero scalar)."""
        x = as_cyc(x)
        value = ZERO
        for m, count in self.coeffs.items():
            value = value + (x**m) * count
        return value

    def __str__(self) -> str:
        return " + ".join(f"{c}*x^{m}" for m, c in sorted(self.coeffs.items(), reverse=True)) or "0"


def rank_table(n_max: int) -> np.ndarray:
    """int64 array T[n, m + n_max] = N(m, n), from sum_n q^(n^2) / ((xq;q)_n (q/x;q)_n)."""
    _check_bound(n_max)
    width = 2 * n_max + 1
    table = np.zeros((n_max + 1, width), dtype=np.int64)
    term = np.zeros_like(table)
    term[0, n_max] = 1
    table += term
    k = 1
    while k * k <= n_max:
        # divide by (1 - x q^k) then (1 - x^-1 q^k)
        for n in range(k, n_max + 1):
            term[n, 1:] += term[n - k, :-1]
        for n in range(k, n_max + 1):
            term[n, :-1] += term[n - k, 1:]
        shift = k * k
        table[shift:] += term[: n_max + 1 - shift]
        k += 1
    return table


def rank_gf(n_max: int) -> list[RankPolynomial]:
    """Per-q^n rank polynomials, n = 0..n_max."""
    table = rank_table(n_max)
    out = []
    for n, row in enumerate(table):
        nonzero = np.flatnonzero(row)
        out.append(RankPolynomial(n, {int(i) - n_max: int(row[i]) for i in nonzero}))
    return out


def specialize(polys: list[RankPolynomial], x: Scalar) -> QSeries:
    """Substitute x := c into the rank polynomials, giving G(c, q) to order len(polys) - 1."""
    return QSeries.from_terms({p.n: p.at(x) for p in polys}, len(polys) - 1)
