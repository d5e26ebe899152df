import math

import numpy as np
import pytest

from zenolab.errors import DomainError
from zenolab.numerics import Histogram, LogReal, RngStream, erf, falling_product, pow_logreal

from _oracles import erf_quadrature


class TestErf:
    def test_zero(self):
        assert erf(0.0) == 0.0

    def test_saturates(self):
        assert abs(erf(6.0) - 1.0) <= 1e-14

    def test_against_quadrature(self):
        for x in (0.1, 0.5, 1.0 / math.sqrt(2.0), 1.0, 1.7, 2.5, 4.0):
            assert abs(erf(x) - erf_quadrature(x)) <= 1e-14

    def test_odd(self):
        rng = np.random.default_rng(11)
        for x in rng.uniform(-5, 5, size=200):
            assert erf(-x) == -erf(x)

    def test_monotone(self):
        xs = np.sort(np.random.default_rng(7).uniform(-6, 6, size=300))
        vals = [erf(x) for x in xs]
        assert all(b >= a for a, b in zip(vals, vals[1:]))
        assert all(abs(v) <= 1.0 for v in vals)


class TestFallingProduct:
    def test_reference_values(self):
        assert falling_product(100, 0) == 100
        assert falling_product(100, 2) == 970200
        assert falling_product(100, 4) == 9034502400

    def test_full_length_is_factorial(self):
        assert falling_product(100, 98) == math.factorial(100)

    @pytest.mark.parametrize("n,r", [(5, 5), (5, -1), (3, 7)])
    def test_domain(self, n, r):
        with pytest.raises(DomainError):
            falling_product(n, r)


class TestLogReal:
    def test_pow_logreal(self):
        assert abs(pow_logreal(9, 100).log10_magnitude - 100 * math.log10(9)) < 1e-12
        assert abs(pow_logreal(1099, 100).log10_magnitude - 304.0998) < 1e-3
        one = pow_logreal(1, 100)
        assert one.sign == 1 and one.log10_magnitude == 0.0

    def test_pow_domain(self):
        with pytest.raises(DomainError):
            pow_logreal(-2.0, 3)
        with pytest.raises(DomainError):
            pow_logreal(0.0, 3)

    def test_float_roundtrip(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            x = float(rng.uniform(-1, 1) * 10.0 ** rng.uniform(-250, 250))
            if x == 0.0:
                continue
            back = LogReal.from_float(x).to_float()
            assert abs(back / x - 1.0) < 1e-14

    def test_zero(self):
        z = LogReal.from_float(0.0)
        assert z.sign == 0 and z.to_float() == 0.0
        assert (z * LogReal.from_float(3.0)).sign == 0

    def test_from_int_huge(self):
        n = math.factorial(200)
        lr = LogReal.from_int(n)
        assert abs(lr.log10_magnitude - math.log10(n)) < 1e-12
        assert str(LogReal.from_int(math.factorial(100))) == "9.3326215e157"

    def test_multiplication_associative_commutative(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            a, b, c = (LogReal(int(rng.choice([-1, 1])), float(rng.uniform(-300, 300)))
                       for _ in range(3))
            ab_c = (a * b) * c
            a_bc = a * (b * c)
            assert ab_c.sign == a_bc.sign
            assert abs(ab_c.log10_magnitude - a_bc.log10_magnitude) <= \
                1e-12 * max(1.0, abs(ab_c.log10_magnitude))
            assert (a * b).log10_magnitude == (b * a).log10_magnitude

    def test_overflowing_to_float(self):
        assert LogReal(1, 400.0).to_float() == math.inf
        assert LogReal(-1, 400.0).to_float() == -math.inf


class TestRngStream:
    def test_reproducible(self):
        a = RngStream(1234, 5).generator().random(64)
        b = RngStream(1234, 5).generator().random(64)
        assert np.array_equal(a, b)

    def test_streams_differ(self):
        a = RngStream(1234, 5).generator().random(64)
        b = RngStream(1234, 6).generator().random(64)
        c = RngStream(1235, 5).generator().random(64)
        assert not np.array_equal(a, b)
        assert not np.array_equal(a, c)


class TestHistogram:
    def test_record_and_total(self):
        h = Histogram(bin_width=2.0)
        for v in (0.1, 1.9, 2.0, 5.5):
            h.record(v)
        assert h.counts == [2, 1, 0]
        assert h.total() == 4

    def test_fixed_bins_overflow(self):
        h = Histogram(bin_width=1.0, n_bins=3)
        h.record(10.0)
        h.record(0.5)
        assert h.counts == [1, 0, 0]
        assert h.overflow == 1
        assert h.total() == 2

    def test_merge(self):
        a = Histogram(bin_width=1.0, n_bins=4)
        b = Histogram(bin_width=1.0, n_bins=4)
        a.record(0.5)
        b.record(0.7)
        b.record(3.2)
        a.merge(b)
        assert a.counts == [2, 0, 0, 1]

    def test_merge_layout_mismatch(self):
        with pytest.raises(DomainError):
            Histogram(bin_width=1.0).merge(Histogram(bin_width=2.0))

    def test_below_origin(self):
        with pytest.raises(DomainError):
            Histogram(bin_width=1.0).record(-0.1)
