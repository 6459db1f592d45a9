"""Backend selection and compiled-vs-pure kernel equivalence."""

import random

import pytest

from hexforms import _kernels_py, kernels

compiled = pytest.mark.skipif(
    kernels._speedups is None, reason="compiled extension not built"
)


class TestSelection:
    def test_backend_is_known(self):
        assert kernels.BACKEND in ("compiled", "pure")

    def test_force_pure(self):
        assert kernels._select_backend(force_pure=True) == "pure"

    @compiled
    def test_compiled_preferred(self):
        assert kernels._select_backend(force_pure=False) == "compiled"


class TestWrappers:
    def test_mul_length_mismatch(self):
        with pytest.raises(ValueError):
            kernels.mul_trunc([1, 2], [1])

    def test_gap_scan_validates_flags_length(self):
        with pytest.raises(ValueError):
            kernels.quaternary_first_gap(1, 1, 1, b"\x01\x01", 5)

    def test_gap_scan_validates_parameters(self):
        flags = bytes([1]) * 10
        with pytest.raises(ValueError):
            kernels.quaternary_first_gap(0, 1, 1, flags, 5)
        with pytest.raises(ValueError):
            kernels.quaternary_first_gap(1, 1, 1, flags, 0)

    def test_huge_coefficients_stay_exact(self):
        # Beyond int64: the wrapper must route to the pure path and the
        # arithmetic must stay exact.
        big = 2**40
        out = kernels.mul_trunc([big, 1, 0], [big, 1, 0])
        assert out == [big * big, 2 * big, 1]
        assert out[0] == 2**80

    def test_huge_coefficient_times_zero_series(self):
        # The product bound is zero, but the inputs still must not be fed
        # to the 64-bit kernel.
        assert kernels.mul_trunc([2**70, 1], [0, 0]) == [0, 0]

    def test_fit_guard(self):
        assert kernels._mul_fits_int64([1] * 100, [1] * 100)
        assert not kernels._mul_fits_int64([2**40] * 3, [2**40] * 3)
        assert not kernels._mul_fits_int64([2**70], [0])


class TestPureKernels:
    def test_mul_matches_schoolbook(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(1, 30)
            xs = [rng.randrange(-9, 10) for _ in range(n)]
            ys = [rng.randrange(-9, 10) for _ in range(n)]
            expected = [0] * n
            for i in range(n):
                for j in range(n - i):
                    expected[i + j] += xs[i] * ys[j]
            assert _kernels_py.mul_trunc(xs, ys) == expected

    def test_hex_table_small(self):
        assert _kernels_py.hex_count_table(3) == [1, 6, 0, 6]
        assert _kernels_py.hex_count_table(0) == [1]

    def test_gap_scan_small(self):
        flags = bytes(1 if v else 0 for v in _kernels_py.hex_count_table(50))
        # x^2 + y^2 + 3*(hex part) misses 6 first.
        assert _kernels_py.quaternary_first_gap(1, 1, 3, flags, 50) == 6
        # x^2 + y^2 + hex part covers everything.
        assert _kernels_py.quaternary_first_gap(1, 1, 1, flags, 50) == -1


@compiled
class TestCompiledEquivalence:
    def test_mul_trunc(self):
        from array import array

        from hexforms import _speedups

        rng = random.Random(11)
        for _ in range(100):
            n = rng.randrange(1, 60)
            xs = [rng.randrange(-50, 51) for _ in range(n)]
            ys = [rng.randrange(-50, 51) for _ in range(n)]
            assert _speedups.mul_trunc(array("q", xs), array("q", ys)) == \
                _kernels_py.mul_trunc(xs, ys)

    def test_hex_count_table(self):
        from hexforms import _speedups

        for n_max in (0, 1, 2, 3, 10, 57, 200):
            assert _speedups.hex_count_table(n_max) == \
                _kernels_py.hex_count_table(n_max)

    def test_quaternary_first_gap(self):
        from hexforms import _speedups

        bound = 300
        flags = bytes(1 if v else 0 for v in _kernels_py.hex_count_table(bound))
        for a in range(1, 4):
            for b in range(a, 5):
                for c in range(1, 7):
                    assert _speedups.quaternary_first_gap(a, b, c, flags, bound) == \
                        _kernels_py.quaternary_first_gap(a, b, c, flags, bound), (a, b, c)
