"""Pure-Python implementations of the hot kernels.

These mirror the compiled module ``hexforms._speedups`` and are selected by
``hexforms.kernels`` when the extension is missing or HEXFORMS_PURE=1 is set.
All arithmetic uses Python integers, so results are exact at any size.
"""

from __future__ import annotations

from math import isqrt


def mul_trunc(xs, ys) -> list[int]:
    """Cauchy product of two coefficient lists, truncated to their length.

    out[n] = sum of xs[i]*ys[j] over i+j = n. Zero coefficients are skipped,
    which keeps products of theta-like (sparse) series cheap; the dense
    worst case is O(N^2).
    """
    n = len(xs)
    if len(ys) != n:
        raise ValueError("coefficient lists must have equal length")
    out = [0] * n
    nzx = [(i, v) for i, v in enumerate(xs) if v]
    nzy = [(j, v) for j, v in enumerate(ys) if v]
    if len(nzy) < len(nzx):
        nzx, nzy = nzy, nzx
    for i, xi in nzx:
        for j, yj in nzy:
            if i + j >= n:
                break
            out[i + j] += xi * yj
    return out


def hex_count_table(n_max: int) -> list[int]:
    """counts[n] = #{(z, w) in Z^2 : z^2 + zw + w^2 = n} for 0 <= n <= n_max.

    Direct double enumeration over |z|, |w| <= 2*ceil(sqrt(n_max)). The norm
    satisfies z^2 + zw + w^2 >= max(z^2, w^2)/4, so any solution with value
    <= n_max lies inside that window.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = [0] * (n_max + 1)
    bound = 2 * _ceil_sqrt(n_max)
    for z in range(-bound, bound + 1):
        zz = z * z
        for w in range(-bound, bound + 1):
            v = zz + z * w + w * w
            if v <= n_max:
                out[v] += 1
    return out


def quaternary_first_gap(a: int, b: int, c: int, hex_flags, bound: int) -> int:
    """Smallest n in [1, bound] not of the form a*x^2 + b*y^2 + c*h, or -1.

    h ranges over the indices where hex_flags is truthy; hex_flags must have
    length at least bound + 1 (the caller guarantees this).
    """
    for n in range(1, bound + 1):
        if not _represents(a, b, c, hex_flags, n):
            return n
    return -1


def _represents(a, b, c, hex_flags, n):
    x = 0
    ax2 = 0
    while ax2 <= n:
        rem = n - ax2
        y = 0
        by2 = 0
        while by2 <= rem:
            r = rem - by2
            if r % c == 0 and hex_flags[r // c]:
                return True
            y += 1
            by2 = b * y * y
        x += 1
        ax2 = a * x * x
    return False


def _ceil_sqrt(n):
    r = isqrt(n)
    return r if r * r == n else r + 1
