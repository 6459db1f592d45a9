"""Toolkit for the quadratic forms a*x^2 + b*y^2 + c*(z^2 + zw + w^2).

Exact representation counting, truncated theta-series arithmetic and
identity verification, exclusion-class lemmas, and the classification of
the coefficient triples (a, b, c) that make the form universal, together
with the six-value escalator criterion.

The hot kernels run from a compiled extension when it is available and from
pure Python otherwise; see :mod:`hexforms.kernels`.
"""

from .classify import (
    ESCALATOR_VALUES,
    GENERAL_ESCALATOR_VALUES,
    ClassificationReport,
    EscalatorVerdict,
    GapReport,
    Rejection,
    classify_all,
    escalator_passes,
    first_gap,
    is_universal,
    ternary_first_gap,
)
from .exclusions import (
    ExclusionFamily,
    ExclusionSet,
    LemmaVerification,
    UnknownLemmaError,
    excluded_for,
    family_contains,
    lemma_ids,
    verify_lemma,
)
from .identities import (
    IdentityCheck,
    RelationCheck,
    UnknownCaseError,
    verify_base_identities,
    verify_coefficient_relations,
)
from .qseries import (
    OrderMismatchError,
    TruncatedSeries,
    hex_theta_series,
    phi_series,
    psi_series,
    series_add,
    series_mul,
    series_scale,
    series_shift,
    substitute_power,
)
from .repcount import (
    QuaternaryForm,
    TernaryMixedForm,
    count_hex,
    count_quaternary,
    count_ternary_mixed,
    m_mixed,
    r2,
    r3,
    t2,
)

__version__ = "0.1.0"

__all__ = [
    "ESCALATOR_VALUES",
    "GENERAL_ESCALATOR_VALUES",
    "ClassificationReport",
    "EscalatorVerdict",
    "ExclusionFamily",
    "ExclusionSet",
    "GapReport",
    "IdentityCheck",
    "LemmaVerification",
    "OrderMismatchError",
    "QuaternaryForm",
    "Rejection",
    "RelationCheck",
    "TernaryMixedForm",
    "TruncatedSeries",
    "UnknownCaseError",
    "UnknownLemmaError",
    "classify_all",
    "count_hex",
    "count_quaternary",
    "count_ternary_mixed",
    "escalator_passes",
    "excluded_for",
    "family_contains",
    "first_gap",
    "hex_theta_series",
    "is_universal",
    "lemma_ids",
    "m_mixed",
    "phi_series",
    "psi_series",
    "r2",
    "r3",
    "series_add",
    "series_mul",
    "series_scale",
    "series_shift",
    "substitute_power",
    "t2",
    "ternary_first_gap",
    "verify_base_identities",
    "verify_coefficient_relations",
    "verify_lemma",
]
