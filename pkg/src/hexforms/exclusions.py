"""Arithmetic exclusion classes and their exhaustive verification.

Each classical lemma used by the classification says a ternary form
represents exactly the integers outside a union of residue families,
either a plain progression {m*l + r} or a power-scaled family
{s^k (m*l + r) : k, l >= 0}. This module encodes those sets as data,
exposes membership predicates, and checks every lemma against brute-force
representation counts up to a bound.

Lemma ids (stable strings, also the CLI surface):

========  ==============================  =====================================
id        form                            excluded integers
========  ==============================  =====================================
L113      x^2 + y^2 + 3z^2                9^k(9l+6)
L123a     x^2 + 2y^2 + 3z^2               4^k(16l+10)
L123b     x^2 + 2(y^2+yz+z^2)             4^k(8l+5)
L139      x^2 + 3y^2 + 9z^2               3l+2, 9^k(9l+6)
L1412     x^2 + 4y^2 + 12z^2              4l+2, 4l+3, 9^k(9l+6)
P11       x^2 + (y^2+yz+z^2)              9^k(9l+6)
P21       2x^2 + (y^2+yz+z^2)             4^k(16l+10)
P13       x^2 + 3(y^2+yz+z^2)             3l+2, 9^k(9l+6)
P14       x^2 + 4(y^2+yz+z^2)             4l+2, 4l+3, 9^k(9l+6)
========  ==============================  =====================================
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import repcount


class UnknownLemmaError(ValueError):
    """A lemma id that is not in the registry."""


@dataclass(frozen=True)
class ExclusionFamily:
    """{s^k (m*l + r) : k, l >= 0} when allows_scaling, else {m*l + r : l >= 0}."""

    scale: int
    modulus: int
    residue: int
    allows_scaling: bool

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ValueError("need modulus >= 1 and 0 <= residue < modulus")
        if self.allows_scaling:
            # Stripping scale-powers must recover k uniquely: scale | modulus
            # together with scale not dividing residue forces scale to not
            # divide any integer congruent to residue. Every family in the
            # registry satisfies both.
            if self.scale <= 1:
                raise ValueError("a scaling family needs scale > 1")
            if self.modulus % self.scale != 0:
                raise ValueError("scale must divide modulus")
            if self.residue % self.scale == 0:
                raise ValueError("residue must not be divisible by scale")
        elif self.scale != 1:
            raise ValueError("a plain progression has scale 1")

    @classmethod
    def scaled(cls, scale: int, modulus: int, residue: int) -> "ExclusionFamily":
        return cls(scale, modulus, residue, True)

    @classmethod
    def progression(cls, modulus: int, residue: int) -> "ExclusionFamily":
        return cls(1, modulus, residue, False)

    def contains(self, n: int) -> bool:
        return family_contains(self, n)


def family_contains(fam: ExclusionFamily, n: int) -> bool:
    """True iff n = s^k (m*l + r) for some k, l >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if fam.allows_scaling:
        while n > 0 and n % fam.scale == 0:
            n //= fam.scale
    return n % fam.modulus == fam.residue


@dataclass(frozen=True)
class ExclusionSet:
    """A finite union of exclusion families."""

    families: tuple[ExclusionFamily, ...]

    def contains(self, n: int) -> bool:
        return any(family_contains(f, n) for f in self.families)


@dataclass(frozen=True)
class LemmaStatement:
    """One representability lemma: count > 0 iff n is outside ``excluded``."""

    lemma_id: str
    form: str
    kind: str  # "diagonal" (r3 coefficients) or "mixed" (a, c)
    coeffs: tuple[int, ...]
    excluded: ExclusionSet


_SCALED_9_6 = ExclusionFamily.scaled(9, 9, 6)
_SCALED_16_10 = ExclusionFamily.scaled(4, 16, 10)
_SCALED_8_5 = ExclusionFamily.scaled(4, 8, 5)
_PROG_3_2 = ExclusionFamily.progression(3, 2)
_PROG_4_2 = ExclusionFamily.progression(4, 2)
_PROG_4_3 = ExclusionFamily.progression(4, 3)

LEMMAS: dict[str, LemmaStatement] = {
    s.lemma_id: s
    for s in (
        LemmaStatement("L113", "x^2 + y^2 + 3z^2", "diagonal", (1, 1, 3),
                       ExclusionSet((_SCALED_9_6,))),
        LemmaStatement("L123a", "x^2 + 2y^2 + 3z^2", "diagonal", (1, 2, 3),
                       ExclusionSet((_SCALED_16_10,))),
        LemmaStatement("L123b", "x^2 + 2(y^2+yz+z^2)", "mixed", (1, 2),
                       ExclusionSet((_SCALED_8_5,))),
        LemmaStatement("L139", "x^2 + 3y^2 + 9z^2", "diagonal", (1, 3, 9),
                       ExclusionSet((_PROG_3_2, _SCALED_9_6))),
        LemmaStatement("L1412", "x^2 + 4y^2 + 12z^2", "diagonal", (1, 4, 12),
                       ExclusionSet((_PROG_4_2, _PROG_4_3, _SCALED_9_6))),
        LemmaStatement("P11", "x^2 + (y^2+yz+z^2)", "mixed", (1, 1),
                       ExclusionSet((_SCALED_9_6,))),
        LemmaStatement("P21", "2x^2 + (y^2+yz+z^2)", "mixed", (2, 1),
                       ExclusionSet((_SCALED_16_10,))),
        LemmaStatement("P13", "x^2 + 3(y^2+yz+z^2)", "mixed", (1, 3),
                       ExclusionSet((_PROG_3_2, _SCALED_9_6))),
        LemmaStatement("P14", "x^2 + 4(y^2+yz+z^2)", "mixed", (1, 4),
                       ExclusionSet((_PROG_4_2, _PROG_4_3, _SCALED_9_6))),
    )
}


def lemma_ids() -> tuple[str, ...]:
    return tuple(LEMMAS)


def get_lemma(lemma_id: str) -> LemmaStatement:
    try:
        return LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemmaError(f"unknown lemma id: {lemma_id!r}") from None


def excluded_for(lemma_id: str, n: int) -> bool:
    """Membership of n in the named lemma's exclusion set."""
    return get_lemma(lemma_id).excluded.contains(n)


@dataclass(frozen=True)
class Discrepancy:
    n: int
    representable: bool
    excluded: bool


@dataclass(frozen=True)
class LemmaVerification:
    lemma_id: str
    bound: int
    discrepancies: tuple[Discrepancy, ...]  # ascending n

    @property
    def verified(self) -> bool:
        return not self.discrepancies


def verify_lemma(lemma_id: str, bound: int = 5000,
                 exclusion_override: ExclusionSet | None = None) -> LemmaVerification:
    """Compare brute-force representability against the exclusion predicate.

    Lists every n <= bound where (count > 0) disagrees with (not excluded);
    an empty list means the lemma is verified up to the bound. Passing
    ``exclusion_override`` swaps in a different exclusion set, which is how
    the negative-control tests corrupt a family and watch the check fail.
    """
    stmt = get_lemma(lemma_id)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    excl = stmt.excluded if exclusion_override is None else exclusion_override
    if stmt.kind == "diagonal":
        flags = repcount.diag3_repr_flags(*stmt.coeffs, bound)
    else:
        flags = repcount.ternary_mixed_repr_flags(*stmt.coeffs, bound)
    discrepancies = []
    for n in range(bound + 1):
        representable = bool(flags[n])
        excluded = excl.contains(n)
        if representable == excluded:
            discrepancies.append(Discrepancy(n, representable, excluded))
    return LemmaVerification(lemma_id, bound, tuple(discrepancies))


def corrupt_residue(fam: ExclusionFamily, delta: int = 1) -> ExclusionFamily:
    """A copy of the family with the residue shifted by delta (mod modulus)."""
    return replace(fam, residue=(fam.residue + delta) % fam.modulus)


def with_corrupted_family(excl: ExclusionSet, index: int, delta: int = 1) -> ExclusionSet:
    """A copy of the set with one family's residue corrupted."""
    fams = list(excl.families)
    fams[index] = corrupt_residue(fams[index], delta)
    return ExclusionSet(tuple(fams))
