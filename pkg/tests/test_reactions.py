import math

import numpy as np
import pytest

from zenolab.errors import DomainError, SaturationWarning
from zenolab.reactions import (CoherentState, RepetitionSchedule, pair_survival,
                               pair_survival_limit, pair_survival_repeated,
                               survival_repeated, survival_repeated_smallstep,
                               survival_single)

GROUND = CoherentState(0.0, 0.0)


class TestSurvivalSingle:
    def test_t_zero(self):
        assert survival_single(CoherentState(1.0, 0.0), 0.0) == 1.0

    def test_ground_state(self):
        for t in (0.0, 0.5, 3.0, 40.0):
            assert survival_single(GROUND, t) == 1.0

    def test_locked_value(self):
        # (q+p)^2 = 4 and e^ln2 - 1 = 1 collapse the exponent to -1
        assert survival_single(CoherentState(1.0, 1.0), math.log(2.0)) == \
            pytest.approx(math.exp(-1.0), rel=1e-14)

    def test_hyperbolic_identity(self):
        # the cosh/sinh combination must equal the expm1 form used internally
        rng = np.random.default_rng(23)
        for _ in range(300):
            q, p = rng.uniform(-2, 2, size=2)
            t = float(rng.uniform(0.0, 3.0))
            ch_sh = math.cosh(t) + math.sinh(t)
            direct = math.exp(-0.5 * (p + q) ** 2 * (0.5 + 0.5 * ch_sh ** 2 - ch_sh))
            assert survival_single(CoherentState(q, p), t) == pytest.approx(direct, rel=1e-12)

    def test_negative_time_rejected(self):
        with pytest.raises(DomainError):
            survival_single(CoherentState(1.0, 0.0), -0.1)

    def test_underflow_returns_zero(self):
        with pytest.warns(Warning):
            assert survival_single(CoherentState(3.0, 3.0), 50.0) == 0.0


class TestSurvivalRepeated:
    def test_n1_equals_single(self):
        s = CoherentState(0.7, -0.2)
        assert survival_repeated(s, RepetitionSchedule(1.3, 1)) == \
            survival_single(s, 1.3)

    def test_monotone_in_n_and_limit(self):
        s = CoherentState(1.0, 0.0)
        vals = [survival_repeated(s, RepetitionSchedule(1.0, n))
                for n in (1, 3, 10, 100, 10000, 10 ** 6)]
        assert all(b > a for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 0.999999

    def test_smallstep_gap_shrinks_quadratically(self):
        s = CoherentState(1.0, 0.5)
        gaps = []
        for n in (100, 200, 400):
            sched = RepetitionSchedule(1.0, n)
            gaps.append(abs(survival_repeated(s, sched)
                            - survival_repeated_smallstep(s, sched)))
        assert gaps[1] < gaps[0] / 1.8
        assert gaps[2] < gaps[1] / 1.8

    def test_schedule_validation(self):
        with pytest.raises(DomainError):
            RepetitionSchedule(0.0, 5)
        with pytest.raises(DomainError):
            RepetitionSchedule(1.0, 0)


class TestPairSurvival:
    def test_t_zero(self):
        assert pair_survival(CoherentState(1, 1), CoherentState(-2, 0.5), 0.0) == 1.0

    def test_ground_pair_all_times(self):
        for t in (0.1, 1.0, 5.0):
            assert pair_survival(GROUND, GROUND, t) == 1.0

    def test_locked_value(self):
        got = pair_survival(CoherentState(1, 0), CoherentState(-1, 0), 1.0)
        want = math.exp(-(math.e - 1.0) ** 2 / 2.0 - 1.0)
        assert got == pytest.approx(want, rel=1e-13)

    def test_can_exceed_one(self):
        assert pair_survival(CoherentState(1, -1), CoherentState(1, -1), 2.0) > 1.0

    def test_saturation_flag(self):
        with pytest.warns(SaturationWarning):
            assert pair_survival_limit(CoherentState(10, 10), CoherentState(10, 10), 10.0) == math.inf


class TestPairLimit:
    def test_ground_state_gives_unity(self):
        assert pair_survival_limit(GROUND, CoherentState(2, 1), 5.0) == 1.0
        assert pair_survival_limit(CoherentState(2, 1), GROUND, 5.0) == 1.0

    def test_locked_value(self):
        assert pair_survival_limit(CoherentState(1, 0), CoherentState(1, 0), 1.0) == \
            pytest.approx(math.e, rel=1e-14)

    def test_repeated_converges_to_limit(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            a = CoherentState(*rng.uniform(-2, 2, size=2))
            b = CoherentState(*rng.uniform(-2, 2, size=2))
            T = float(rng.uniform(0.1, 2.0))
            lim = pair_survival_limit(a, b, T)
            got = pair_survival_repeated(a, b, RepetitionSchedule(T, 10 ** 6))
            assert got == pytest.approx(lim, rel=1e-4)
