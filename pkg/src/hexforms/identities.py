"""Coefficientwise verification of the theta-series identities.

Two base identities relate the hexagonal theta series a(q) (here
``hex_theta_series``) to its q -> q^4 substitution and a product of two psi
series:

    a(q)              = a(q^4) + 6 q psi(q^2) psi(q^6)
    phi(q) phi(q^3)   = a(q^4) + 2 q psi(q^2) psi(q^6)

Multiplying them by phi(q^a) or substituting q -> q^m yields coefficient
relations between the counting functions of :mod:`hexforms.repcount`; the
four cases C1a, C1b, C3, C4 below are the ones the classification leans on.
Every case is verified twice, once with batch enumeration counts and once
with series products, and the two routes must reach the same verdict.

A verification is exact up to the chosen truncation order; nothing here
proves an identity beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import repcount
from .qseries import (
    hex_theta_series,
    phi_series,
    psi_series,
    series_add,
    series_mul,
    series_scale,
    series_shift,
    substitute_power,
)

BASE_IDENTITY_IDS = ("hex-theta-split", "square-product-split")
CASE_IDS = ("C1a", "C1b", "C3", "C4")

DEFAULT_BASE_ORDER = 10000
DEFAULT_CASE_ORDER = 3000


class UnknownCaseError(ValueError):
    """A coefficient-relation case id that is not registered."""


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one coefficientwise comparison up to a truncation order.

    ``failed_at`` is the smallest failing index (with both coefficient
    values), or None when every coefficient matched.
    """

    identity_id: str
    truncation_order: int
    failed_at: int | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None

    @property
    def verified(self) -> bool:
        return self.failed_at is None


@dataclass(frozen=True)
class RelationCheck:
    """One case verified by both routes; the verdicts must agree."""

    case_id: str
    truncation_order: int
    enumeration: IdentityCheck
    series: IdentityCheck

    @property
    def verified(self) -> bool:
        return self.enumeration.verified and self.series.verified

    @property
    def routes_agree(self) -> bool:
        return self.enumeration.failed_at == self.series.failed_at


def compare_sequences(identity_id: str, lhs: Sequence[int], rhs: Sequence[int]) -> IdentityCheck:
    """Scan two coefficient sequences and report the first mismatch."""
    if len(lhs) != len(rhs):
        raise ValueError("sequences must have equal length")
    for n, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return IdentityCheck(identity_id, len(lhs) - 1, n, a, b)
    return IdentityCheck(identity_id, len(lhs) - 1)


def verify_base_identities(order: int = DEFAULT_BASE_ORDER) -> tuple[IdentityCheck, IdentityCheck]:
    """Check both base identities coefficientwise up to ``order``."""
    hex_t = hex_theta_series(order)
    psi_prod = series_mul(substitute_power(2, psi_series(order)),
                          substitute_power(6, psi_series(order)))
    hex_q4 = substitute_power(4, hex_t)
    shifted = series_shift(1, psi_prod)
    first = compare_sequences(
        BASE_IDENTITY_IDS[0],
        hex_t.coeffs,
        series_add(hex_q4, series_scale(6, shifted)).coeffs,
    )
    phi = phi_series(order)
    second = compare_sequences(
        BASE_IDENTITY_IDS[1],
        series_mul(phi, substitute_power(3, phi)).coeffs,
        series_add(hex_q4, series_scale(2, shifted)).coeffs,
    )
    return first, second


# Per case: the ternary mixed forms (1, c_small) and (1, c_big), the shift k
# of the mixed term, its (alpha, beta, gamma), and the diagonal form whose r3
# counts appear on the second left-hand side. C1b is handled separately
# because its relations split by parity.
_PLAIN_CASES = {
    "C1a": {"c_small": 1, "c_big": 4, "shift": 1, "mixed": (1, 2, 6), "diag": (1, 1, 3)},
    "C3": {"c_small": 3, "c_big": 12, "shift": 3, "mixed": (1, 6, 18), "diag": (1, 3, 9)},
    "C4": {"c_small": 4, "c_big": 16, "shift": 4, "mixed": (1, 8, 24), "diag": (1, 4, 12)},
}


def verify_coefficient_relations(case_id: str, order: int = DEFAULT_CASE_ORDER) -> RelationCheck:
    """Verify one relation case by enumeration and by series products."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if case_id in _PLAIN_CASES:
        params = _PLAIN_CASES[case_id]
        enum = _plain_case_by_enumeration(case_id, order, **params)
        ser = _plain_case_by_series(case_id, order, **params)
    elif case_id == "C1b":
        enum = _c1b_by_enumeration(order)
        ser = _c1b_by_series(order)
    else:
        raise UnknownCaseError(f"unknown case id: {case_id!r}")
    return RelationCheck(case_id, order, enum, ser)


def _plain_case_by_enumeration(case_id, order, c_small, c_big, shift, mixed, diag):
    a_small = repcount.ternary_mixed_count_table(1, c_small, order)
    a_big = repcount.ternary_mixed_count_table(1, c_big, order)
    m_tab = repcount.mixed_count_table(*mixed, order)
    d_tab = repcount.diag3_count_table(*diag, order)
    lhs, rhs = [], []
    for n in range(order + 1):
        m_term = m_tab[n - shift] if n >= shift else 0
        lhs += [a_small[n], d_tab[n]]
        rhs += [a_big[n] + 6 * m_term, a_big[n] + 2 * m_term]
    return _compare_interleaved(case_id + "/enumeration", order, lhs, rhs)


def _plain_case_by_series(case_id, order, c_small, c_big, shift, mixed, diag):
    phi = phi_series(order)
    hex_t = hex_theta_series(order)
    psi = psi_series(order)
    s_small = series_mul(phi, substitute_power(c_small, hex_t))
    s_big = series_mul(phi, substitute_power(c_big, hex_t))
    _, beta, gamma = mixed
    s_mixed = series_shift(
        shift,
        series_mul(series_mul(phi, substitute_power(beta, psi)),
                   substitute_power(gamma, psi)),
    )
    _, d2, d3 = diag
    s_diag = series_mul(series_mul(phi, substitute_power(d2, phi)),
                        substitute_power(d3, phi))
    lhs, rhs = [], []
    for n in range(order + 1):
        lhs += [s_small[n], s_diag[n]]
        rhs += [s_big[n] + 6 * s_mixed[n], s_big[n] + 2 * s_mixed[n]]
    return _compare_interleaved(case_id + "/series", order, lhs, rhs)


def _c1b_by_enumeration(order):
    # Even n = 2K compares against A-counts of (1, 2); odd n = 2K + 1
    # against the (1, 1, 3) square/triangular mixture.
    a21 = repcount.ternary_mixed_count_table(2, 1, order)
    a12 = repcount.ternary_mixed_count_table(1, 2, order // 2)
    m113 = repcount.mixed_count_table(1, 1, 3, order // 2)
    d123 = repcount.diag3_count_table(1, 2, 3, order)
    lhs, rhs = [], []
    for n in range(order + 1):
        half = n // 2
        lhs += [a21[n], d123[n]]
        if n % 2 == 0:
            rhs += [a12[half], a12[half]]
        else:
            rhs += [6 * m113[half], 2 * m113[half]]
    return _compare_interleaved("C1b/enumeration", order, lhs, rhs)


def _c1b_by_series(order):
    phi = phi_series(order)
    hex_t = hex_theta_series(order)
    psi = psi_series(order)
    s_a21 = series_mul(substitute_power(2, phi), hex_t)
    s_a12 = series_mul(phi, substitute_power(2, hex_t))
    s_m113 = series_mul(series_mul(phi, psi), substitute_power(3, psi))
    s_d123 = series_mul(series_mul(phi, substitute_power(2, phi)),
                        substitute_power(3, phi))
    lhs, rhs = [], []
    for n in range(order + 1):
        half = n // 2
        lhs += [s_a21[n], s_d123[n]]
        if n % 2 == 0:
            rhs += [s_a12[half], s_a12[half]]
        else:
            rhs += [6 * s_m113[half], 2 * s_m113[half]]
    return _compare_interleaved("C1b/series", order, lhs, rhs)


def _compare_interleaved(identity_id, order, lhs, rhs):
    # Two relations per index n, interleaved; report the smallest failing n.
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return IdentityCheck(identity_id, order, k // 2, a, b)
    return IdentityCheck(identity_id, order)
