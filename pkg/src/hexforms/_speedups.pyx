# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: truncated Cauchy products, the hexagonal-norm count
table, and the first-gap scan for quaternary forms.

Coefficients are 64-bit signed here; ``hexforms.kernels`` checks the ranges
beforehand and routes anything that could overflow to the exact pure-Python
fallback instead.
"""

from cpython cimport array

import array

cdef array.array _I64_TEMPLATE = array.array("q", [])


def mul_trunc(const long long[::1] xs, const long long[::1] ys):
    """Cauchy product truncated to len(xs); returns a list of ints."""
    cdef Py_ssize_t n = xs.shape[0]
    if ys.shape[0] != n:
        raise ValueError("coefficient lists must have equal length")
    cdef array.array out_arr = array.clone(_I64_TEMPLATE, n, zero=True)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, j, lim
    cdef long long xi
    for i in range(n):
        xi = xs[i]
        if xi == 0:
            continue
        lim = n - i
        for j in range(lim):
            if ys[j] != 0:
                out[i + j] += xi * ys[j]
    return list(out_arr)


def hex_count_table(Py_ssize_t n_max):
    """counts[n] = #{(z, w) in Z^2 : z^2 + zw + w^2 = n} for 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    cdef array.array out_arr = array.clone(_I64_TEMPLATE, n_max + 1, zero=True)
    cdef long long[::1] out = out_arr
    cdef long long bound = 2 * _ceil_sqrt(n_max)
    cdef long long z, w, zz, v
    for z in range(-bound, bound + 1):
        zz = z * z
        for w in range(-bound, bound + 1):
            v = zz + z * w + w * w
            if v <= n_max:
                out[v] += 1
    return list(out_arr)


def quaternary_first_gap(long long a, long long b, long long c,
                         const unsigned char[::1] hex_flags, long long bound):
    """Smallest n in [1, bound] not of the form a*x^2 + b*y^2 + c*h, or -1.

    hex_flags must have length at least bound + 1 (checked by the caller).
    """
    cdef long long n
    for n in range(1, bound + 1):
        if not _represents(a, b, c, hex_flags, n):
            return n
    return -1


cdef bint _represents(long long a, long long b, long long c,
                      const unsigned char[::1] hex_flags, long long n) noexcept:
    cdef long long x = 0, ax2 = 0, y, by2, rem, r
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


cdef long long _ceil_sqrt(long long n) noexcept:
    if n <= 0:
        return 0
    cdef long long r = <long long> (n ** 0.5)
    while r * r > n:
        r -= 1
    while r * r < n:
        r += 1
    return r
