"""Universality scanning and classification of coefficient triples.

A quaternary form a*x^2 + b*y^2 + c*(z^2 + zw + w^2) is scanned for its
first gap, the smallest integer it fails to represent. Forms with no gap up
to the scan bound are reported as universal-to-bound; the finite scan cannot
certify more than that, so every report carries its bound. Independently,
the escalator test checks the six values 1, 2, 3, 5, 6, 10, whose
representability is equivalent to universality for forms of this shape; a
disagreement between the two verdicts within a scan is flagged and treated
as a failure by the test suite.

The ternary forms a*x^2 + c*(y^2 + yz + z^2) are never universal; for them
only the first gap is reported, and a scan that finds none is inconclusive
rather than a universality claim.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels, repcount
from .repcount import QuaternaryForm, TernaryMixedForm

ESCALATOR_VALUES = (1, 2, 3, 5, 6, 10)

# For arbitrary positive-definite integral quadratic forms, representing
# these 29 integers implies universality; ESCALATOR_VALUES is the subset
# that suffices for the a*x^2 + b*y^2 + c*(z^2+zw+w^2) shape. Kept as a
# reference constant, not used by the scans.
GENERAL_ESCALATOR_VALUES = (
    1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 23, 26,
    29, 30, 31, 34, 35, 37, 42, 58, 93, 110, 145, 203, 290,
)

DEFAULT_SCAN_BOUND = 2000

# The smallest box that can contain the full list of universal triples.
MIN_A_MAX, MIN_B_MAX, MIN_C_MAX = 2, 10, 4


@dataclass(frozen=True)
class EscalatorVerdict:
    passed: bool
    failed_at: int | None = None


@dataclass(frozen=True)
class GapReport:
    """Scan outcome for one quaternary form."""

    form: QuaternaryForm
    scan_bound: int
    first_gap: int | None
    escalator: EscalatorVerdict

    @property
    def universal_to_bound(self) -> bool:
        return self.first_gap is None

    @property
    def theorem_violation(self) -> bool:
        # Gap-scan and escalator verdicts must agree; a mismatch would
        # contradict the escalator criterion within the scanned range.
        return (self.first_gap is None) != self.escalator.passed


@dataclass(frozen=True)
class Rejection:
    triple: tuple[int, int, int]
    first_gap: int


@dataclass(frozen=True)
class ClassificationReport:
    """All universal-to-bound triples in a search box, with evidence."""

    a_max: int
    b_max: int
    c_max: int
    bound: int
    universal_triples: tuple[tuple[int, int, int], ...]  # sorted by (c, a, b)
    rejections: tuple[Rejection, ...]  # same order, each with its witness
    theorem_violations: tuple[tuple[int, int, int], ...]


def first_gap(form: QuaternaryForm | TernaryMixedForm, bound: int) -> int | None:
    """Smallest n <= bound the form does not represent, or None."""
    if bound < 1:
        raise ValueError("scan bound must be >= 1")
    if isinstance(form, TernaryMixedForm):
        flags = repcount.ternary_mixed_repr_flags(form.a, form.c, bound)
        for n in range(1, bound + 1):
            if not flags[n]:
                return n
        return None
    gap = kernels.quaternary_first_gap(
        form.a, form.b, form.c, repcount.hex_repr_flags(bound), bound
    )
    return None if gap == -1 else gap


def escalator_passes(form: QuaternaryForm) -> EscalatorVerdict:
    """Check the six escalator values; fail carries the smallest miss."""
    for n in ESCALATOR_VALUES:
        if repcount.count_quaternary(form, n) == 0:
            return EscalatorVerdict(False, n)
    return EscalatorVerdict(True)


def is_universal(form: QuaternaryForm, bound: int = DEFAULT_SCAN_BOUND) -> GapReport:
    """Combine the gap scan and the escalator test into one report."""
    if bound < max(ESCALATOR_VALUES):
        raise ValueError("scan bound must reach the largest escalator value")
    return GapReport(form, bound, first_gap(form, bound), escalator_passes(form))


def ternary_first_gap(a: int, c: int, bound: int = DEFAULT_SCAN_BOUND) -> int | None:
    """First gap of a*x^2 + c*(y^2 + yz + z^2), or None if inconclusive.

    No such form represents everything, so a None result only means the
    witness lies beyond the bound, never universality.
    """
    return first_gap(TernaryMixedForm(a, c), bound)


def classify_all(a_max: int, b_max: int, c_max: int,
                 bound: int = DEFAULT_SCAN_BOUND, *,
                 enforce_minimum_box: bool = True) -> ClassificationReport:
    """Scan the box 1 <= a <= min(a_max, b), b <= b_max, c <= c_max.

    By default the box must be large enough to contain the complete list of
    universal triples (a_max >= 2, b_max >= 10, c_max >= 4), so the result
    is the full classification; pass ``enforce_minimum_box=False`` to scan a
    smaller box anyway.
    """
    if min(a_max, b_max, c_max) < 1:
        raise ValueError("box limits must be positive")
    if enforce_minimum_box and (a_max < MIN_A_MAX or b_max < MIN_B_MAX or c_max < MIN_C_MAX):
        raise ValueError(
            f"box ({a_max}, {b_max}, {c_max}) cannot contain the full list of "
            f"universal triples; need at least ({MIN_A_MAX}, {MIN_B_MAX}, {MIN_C_MAX}) "
            "or enforce_minimum_box=False"
        )
    universal: list[tuple[int, int, int]] = []
    rejections: list[Rejection] = []
    violations: list[tuple[int, int, int]] = []
    repcount.hex_repr_flags(bound)  # build the shared table once
    for c in range(1, c_max + 1):
        for a in range(1, a_max + 1):
            for b in range(a, b_max + 1):
                report = is_universal(QuaternaryForm(a, b, c), bound)
                if report.theorem_violation:
                    violations.append((a, b, c))
                if report.first_gap is None:
                    universal.append((a, b, c))
                else:
                    rejections.append(Rejection((a, b, c), report.first_gap))
    # The (c, a, b) iteration order above is already the report order.
    return ClassificationReport(
        a_max, b_max, c_max, bound,
        tuple(universal), tuple(rejections), tuple(violations),
    )
