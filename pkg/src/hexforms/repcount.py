"""Exact enumeration counters for representation numbers.

Every function here counts integer tuples directly, with the tightest
obvious enumeration bounds; these are the ground-truth oracles the series
and classification modules are checked against. Notation for the counting
functions over nonnegative n:

* ``count_hex(n)``            pairs (z, w) with z^2 + zw + w^2 = n
* ``count_ternary_mixed``     triples for a*x^2 + c*(y^2 + yz + z^2)
* ``count_quaternary``        quadruples for a*x^2 + b*y^2 + c*(z^2+zw+w^2)
* ``r2, t2, r3, m_mixed``     the diagonal and square/triangular mixtures

The batch tables at the bottom tally the same tuples in one sweep over a
whole index range; they exist so that range-wide verification stays cheap,
and tests pin them against the per-n counters.

Memo tables are built once and only grow; on CPython the plain assignments
used here are safe under concurrent readers, and results never depend on
call order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import kernels


@dataclass(frozen=True)
class TernaryMixedForm:
    """a*x^2 + c*(y^2 + yz + z^2) with positive a, c."""

    a: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.c < 1:
            raise ValueError("form coefficients must be positive")


@dataclass(frozen=True)
class QuaternaryForm:
    """a*x^2 + b*y^2 + c*(z^2 + zw + w^2), normalized so that a <= b."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.c < 1:
            raise ValueError("form coefficients must be positive")
        if self.a > self.b:
            raise ValueError("expected a <= b (swap the square coefficients)")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@lru_cache(maxsize=None)
def count_hex(n: int) -> int:
    """#{(z, w) in Z^2 : z^2 + zw + w^2 = n}.

    Completing the square turns the equation into (2w + z)^2 = 4n - 3z^2,
    so for each admissible z it suffices to test one discriminant for being
    a perfect square of the right parity. This is a different route from
    the double enumeration used for the theta series, which is exactly why
    the two are cross-checked in the test suite.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    m = 4 * n
    for z in range(isqrt(m // 3) + 1):
        d = m - 3 * z * z
        s = isqrt(d)
        if s * s != d or (s - z) % 2:
            continue
        # w = (s - z)/2 and w = (-s - z)/2 coincide only when s == 0
        sols = 1 if s == 0 else 2
        total += sols if z == 0 else 2 * sols
    return total


def count_ternary_mixed(form: TernaryMixedForm | tuple[int, int], n: int) -> int:
    """A(n) for a*x^2 + c*(y^2 + yz + z^2): exact count over Z^3."""
    a, c = _as_ternary(form)
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    x = 0
    while a * x * x <= n:
        rem = n - a * x * x
        if rem % c == 0:
            h = count_hex(rem // c)
            total += h if x == 0 else 2 * h
        x += 1
    return total


def count_quaternary(form: QuaternaryForm | tuple[int, int, int], n: int) -> int:
    """Exact count over Z^4 for a*x^2 + b*y^2 + c*(z^2 + zw + w^2).

    Computed by summing the ternary counts over the b*y^2 slices.
    """
    a, b, c = _as_quaternary(form)
    return _count_quaternary_raw(a, b, c, n)


def _count_quaternary_raw(a: int, b: int, c: int, n: int) -> int:
    # No a <= b normalization here; the symmetry test relies on that.
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    y = 0
    while b * y * y <= n:
        cnt = count_ternary_mixed((a, c), n - b * y * y)
        total += cnt if y == 0 else 2 * cnt
        y += 1
    return total


def r2(alpha: int, beta: int, n: int) -> int:
    """#{(x, y) in Z^2 : alpha*x^2 + beta*y^2 = n}."""
    _check_params(n, alpha, beta)
    total = 0
    x = 0
    while alpha * x * x <= n:
        rem = n - alpha * x * x
        if rem % beta == 0:
            cnt = _square_count(rem // beta)
            total += cnt if x == 0 else 2 * cnt
        x += 1
    return total


def t2(alpha: int, beta: int, n: int) -> int:
    """#{(x, y) in N0^2 : alpha*t_x + beta*t_y = n} with t_x = x(x+1)/2."""
    _check_params(n, alpha, beta)
    total = 0
    x = 0
    while alpha * _tri(x) <= n:
        rem = n - alpha * _tri(x)
        if rem % beta == 0 and _is_triangular(rem // beta):
            total += 1
        x += 1
    return total


def r3(alpha: int, beta: int, gamma: int, n: int) -> int:
    """#{(x, y, z) in Z^3 : alpha*x^2 + beta*y^2 + gamma*z^2 = n}."""
    _check_params(n, alpha, beta, gamma)
    total = 0
    x = 0
    while alpha * x * x <= n:
        rem_x = n - alpha * x * x
        mx = 1 if x == 0 else 2
        y = 0
        while beta * y * y <= rem_x:
            rem = rem_x - beta * y * y
            if rem % gamma == 0:
                my = 1 if y == 0 else 2
                total += mx * my * _square_count(rem // gamma)
            y += 1
        x += 1
    return total


def m_mixed(alpha: int, beta: int, gamma: int, n: int) -> int:
    """#{(x, y, z) in Z x N0^2 : alpha*x^2 + beta*t_y + gamma*t_z = n}."""
    _check_params(n, alpha, beta, gamma)
    total = 0
    z = 0
    while gamma * _tri(z) <= n:
        base = gamma * _tri(z)
        y = 0
        while base + beta * _tri(y) <= n:
            rem = n - base - beta * _tri(y)
            if rem % alpha == 0:
                total += _square_count(rem // alpha)
            y += 1
        z += 1
    return total


# ---------------------------------------------------------------------------
# Batch tables: the same enumerations, tallied over a full range at once.
# ---------------------------------------------------------------------------

_hex_table: list[int] = [1]
_hex_flags: bytes = b"\x01"


def hex_count_table(bound: int) -> list[int]:
    """Memoized table of count_hex values for 0 <= n <= bound.

    Built by the double-enumeration kernel (a tally over all (z, w) pairs),
    independently of the per-n discriminant method above.
    """
    return _hex_counts_upto(bound)[: bound + 1]


def hex_repr_flags(bound: int) -> bytes:
    """Byte flags, 1 where n is a value of z^2 + zw + w^2; length >= bound+1."""
    global _hex_flags
    if bound >= len(_hex_flags):
        table = _hex_counts_upto(bound)
        _hex_flags = bytes(1 if v else 0 for v in table)
    return _hex_flags


def _hex_counts_upto(bound: int) -> list[int]:
    global _hex_table
    if bound >= len(_hex_table):
        _hex_table = kernels.hex_count_table(max(bound, 2 * len(_hex_table)))
    return _hex_table


def ternary_mixed_repr_flags(a: int, c: int, bound: int) -> bytes:
    """flags[n] = 1 iff count_ternary_mixed((a, c), n) > 0, for n <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    hexfl = hex_repr_flags(bound // c)
    flags = bytearray(bound + 1)
    x = 0
    while a * x * x <= bound:
        base = a * x * x
        for m in range((bound - base) // c + 1):
            if hexfl[m]:
                flags[base + c * m] = 1
        x += 1
    return bytes(flags)


def ternary_mixed_count_table(a: int, c: int, bound: int) -> list[int]:
    """counts[n] = count_ternary_mixed((a, c), n) for all n <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    hexcnt = _hex_counts_upto(bound // c)
    out = [0] * (bound + 1)
    x = 0
    while a * x * x <= bound:
        base = a * x * x
        mx = 1 if x == 0 else 2
        for m in range((bound - base) // c + 1):
            h = hexcnt[m]
            if h:
                out[base + c * m] += mx * h
        x += 1
    return out


def diag3_count_table(alpha: int, beta: int, gamma: int, bound: int) -> list[int]:
    """counts[n] = r3(alpha, beta, gamma, n) for all n <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out = [0] * (bound + 1)
    x = 0
    while alpha * x * x <= bound:
        rem_x = bound - alpha * x * x
        mx = 1 if x == 0 else 2
        y = 0
        while beta * y * y <= rem_x:
            base = alpha * x * x + beta * y * y
            mxy = mx * (1 if y == 0 else 2)
            z = 0
            while base + gamma * z * z <= bound:
                out[base + gamma * z * z] += mxy * (1 if z == 0 else 2)
                z += 1
            y += 1
        x += 1
    return out


def diag3_repr_flags(alpha: int, beta: int, gamma: int, bound: int) -> bytes:
    """flags[n] = 1 iff r3(alpha, beta, gamma, n) > 0, for n <= bound."""
    return bytes(1 if v else 0 for v in diag3_count_table(alpha, beta, gamma, bound))


def mixed_count_table(alpha: int, beta: int, gamma: int, bound: int) -> list[int]:
    """counts[n] = m_mixed(alpha, beta, gamma, n) for all n <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out = [0] * (bound + 1)
    z = 0
    while gamma * _tri(z) <= bound:
        base_z = gamma * _tri(z)
        y = 0
        while base_z + beta * _tri(y) <= bound:
            base = base_z + beta * _tri(y)
            x = 0
            while base + alpha * x * x <= bound:
                out[base + alpha * x * x] += 1 if x == 0 else 2
                x += 1
            y += 1
        z += 1
    return out


def _as_ternary(form) -> tuple[int, int]:
    if isinstance(form, TernaryMixedForm):
        return form.a, form.c
    a, c = form
    TernaryMixedForm(a, c)  # validate
    return a, c


def _as_quaternary(form) -> tuple[int, int, int]:
    if isinstance(form, QuaternaryForm):
        return form.triple
    a, b, c = form
    QuaternaryForm(a, b, c)  # validate
    return a, b, c


def _square_count(v: int) -> int:
    # #{x in Z : x^2 = v}
    if v < 0:
        return 0
    r = isqrt(v)
    if r * r != v:
        return 0
    return 1 if r == 0 else 2


def _is_triangular(v: int) -> bool:
    if v < 0:
        return False
    s = 8 * v + 1
    r = isqrt(s)
    return r * r == s


def _tri(x: int) -> int:
    return x * (x + 1) // 2


def _check_params(n: int, *params: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if any(p < 1 for p in params):
        raise ValueError("form parameters must be positive")
