"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled module ``hexforms._speedups`` works on 64-bit integers; the
wrappers here verify that a computation fits in that range and fall back to
the exact pure-Python implementation when it might not. Setting the
environment variable HEXFORMS_PURE=1 forces the fallback everywhere (the
benchmark and the equivalence tests use this).
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_INT64_MAX = 2**63 - 1


def _select_backend(force_pure: bool | None = None) -> str:
    if force_pure is None:
        force_pure = os.environ.get("HEXFORMS_PURE", "") not in ("", "0")
    if _speedups is not None and not force_pure:
        return "compiled"
    return "pure"


BACKEND = _select_backend()


def mul_trunc(xs, ys) -> list[int]:
    """Truncated Cauchy product; output length equals input length."""
    if len(xs) != len(ys):
        raise ValueError("coefficient lists must have equal length")
    if BACKEND == "compiled" and _mul_fits_int64(xs, ys):
        return _speedups.mul_trunc(array("q", xs), array("q", ys))
    return _kernels_py.mul_trunc(xs, ys)


def hex_count_table(n_max: int) -> list[int]:
    """counts[n] = #{(z, w) in Z^2 : z^2 + zw + w^2 = n} for 0 <= n <= n_max."""
    if BACKEND == "compiled":
        return _speedups.hex_count_table(n_max)
    return _kernels_py.hex_count_table(n_max)


def quaternary_first_gap(a: int, b: int, c: int, hex_flags, bound: int) -> int:
    """Smallest n in [1, bound] not of the form a*x^2 + b*y^2 + c*h, or -1.

    hex_flags[m] must be truthy exactly when m is a value of z^2 + zw + w^2.
    """
    if min(a, b, c) < 1 or bound < 1:
        raise ValueError("form coefficients and bound must be positive")
    if len(hex_flags) < bound + 1:
        raise ValueError("hex_flags must cover indices up to the scan bound")
    if BACKEND == "compiled":
        if not isinstance(hex_flags, (bytes, bytearray)):
            hex_flags = bytes(hex_flags)
        return _speedups.quaternary_first_gap(a, b, c, hex_flags, bound)
    return _kernels_py.quaternary_first_gap(a, b, c, hex_flags, bound)


def _mul_fits_int64(xs, ys):
    # Inputs must fit int64 themselves, and every accumulated output
    # coefficient is bounded by len * max|x| * max|y|.
    mx = max(map(abs, xs), default=0)
    my = max(map(abs, ys), default=0)
    if mx > _INT64_MAX or my > _INT64_MAX:
        return False
    return len(xs) * mx * my <= _INT64_MAX
