"""Exact integer power series in q, truncated at a fixed order.

A :class:`TruncatedSeries` stores the coefficients of q^0 .. q^N as plain
Python integers, so every operation is exact; nothing here touches floating
point. The module also builds the three theta-type generating functions the
rest of the package works with:

* ``phi_series``: counts of x^2 = n over x in Z (1, 2, 0, 0, 2, ...),
* ``psi_series``: indicator of the triangular numbers x(x+1)/2,
* ``hex_theta_series``: counts of z^2 + zw + w^2 = n over (z, w) in Z^2.

Products truncate silently at the common order, matching how generating
functions are actually used: coefficients beyond the truncation are unknown,
not zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable

from . import kernels


class OrderMismatchError(ValueError):
    """Two series with different truncation orders were combined."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficient of q^n at index n, for 0 <= n <= truncation_order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("a series carries at least the q^0 coefficient")

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series(coeffs: Iterable[int]) -> TruncatedSeries:
    """Build a series from any iterable of integers."""
    return TruncatedSeries(tuple(int(c) for c in coeffs))


def zero_series(order: int) -> TruncatedSeries:
    return TruncatedSeries((0,) * (order + 1))


def one_series(order: int) -> TruncatedSeries:
    return TruncatedSeries((1,) + (0,) * order)


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum; requires equal truncation orders."""
    _check_orders(x, y)
    return TruncatedSeries(tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(x, y)
    return TruncatedSeries(tuple(kernels.mul_trunc(x.coeffs, y.coeffs)))


def series_scale(k: int, x: TruncatedSeries) -> TruncatedSeries:
    """Multiply every coefficient by the integer k."""
    return TruncatedSeries(tuple(k * c for c in x.coeffs))


def series_shift(k: int, x: TruncatedSeries) -> TruncatedSeries:
    """Multiply by q^k: out[n] = x[n-k] for n >= k, zero below.

    Coefficients pushed past the truncation order are dropped.
    """
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k == 0:
        return x
    n = len(x.coeffs)
    if k >= n:
        return zero_series(x.truncation_order)
    return TruncatedSeries((0,) * k + x.coeffs[: n - k])


def substitute_power(m: int, x: TruncatedSeries) -> TruncatedSeries:
    """Replace q by q^m: out[m*i] = x[i] for m*i <= N, all else zero."""
    if m < 1:
        raise ValueError("substitution power must be >= 1")
    if m == 1:
        return x
    order = x.truncation_order
    out = [0] * (order + 1)
    for i in range(order // m + 1):
        out[m * i] = x.coeffs[i]
    return TruncatedSeries(tuple(out))


def phi_series(order: int) -> TruncatedSeries:
    """Theta series of the squares: 1 at n=0, 2 at each positive square."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [0] * (order + 1)
    out[0] = 1
    for k in range(1, isqrt(order) + 1):
        out[k * k] = 2
    return TruncatedSeries(tuple(out))


def psi_series(order: int) -> TruncatedSeries:
    """Indicator of the triangular numbers x(x+1)/2, x >= 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = [0] * (order + 1)
    x = 0
    while x * (x + 1) // 2 <= order:
        out[x * (x + 1) // 2] = 1
        x += 1
    return TruncatedSeries(tuple(out))


def hex_theta_series(order: int) -> TruncatedSeries:
    """Theta series of z^2 + zw + w^2, by direct double enumeration."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries(tuple(kernels.hex_count_table(order)))


def _check_orders(x: TruncatedSeries, y: TruncatedSeries) -> None:
    if x.truncation_order != y.truncation_order:
        raise OrderMismatchError(
            f"truncation orders differ: {x.truncation_order} vs {y.truncation_order}"
        )
