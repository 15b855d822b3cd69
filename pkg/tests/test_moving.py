import random

import pytest

from alphamean import (
    WeightSchedule,
    alpha_average,
    closed_form_linear,
    mea,
    moving_alpha_average,
    window_alpha_average,
)

FAMILIES = [
    ("arithmetic", WeightSchedule.arithmetic(), None),
    ("weighted", WeightSchedule.weighted_arithmetic(), None),
    ("exponential", WeightSchedule.constant(0.5), 0.5),
]


class TestWindowAverage:
    def test_constant_weight_window(self):
        got = window_alpha_average([1, 2, 3, 4], n=4, N=2, alpha=WeightSchedule.constant(0.5))
        assert got == 0.5 * 3 + 0.5 * 4

    def test_window_of_one_returns_value(self):
        xs = [5.0, 7.5, -2.0]
        for n in (1, 2, 3):
            assert window_alpha_average(xs, n=n, N=1, alpha=WeightSchedule.arithmetic()) == xs[n - 1]

    def test_full_window_arithmetic(self):
        assert window_alpha_average([1, 2, 3], n=3, N=3, alpha=WeightSchedule.arithmetic()) == 2.0

    def test_out_of_range_windows(self):
        xs = [1.0, 2.0, 3.0]
        with pytest.raises(ValueError):
            window_alpha_average(xs, n=2, N=3, alpha=WeightSchedule.arithmetic())
        with pytest.raises(ValueError):
            window_alpha_average(xs, n=4, N=2, alpha=WeightSchedule.arithmetic())
        with pytest.raises(ValueError):
            window_alpha_average(xs, n=1, N=0, alpha=WeightSchedule.arithmetic())


class TestMovingAverage:
    def test_sliding_arithmetic(self):
        series = moving_alpha_average([1, 2, 3, 4, 5], 3, WeightSchedule.arithmetic())
        assert series.values == (2.0, 3.0, 4.0)
        assert series.window_length == 3
        assert series.limit == 4.0

    def test_constant_series(self):
        series = moving_alpha_average([2.5] * 8, 4, WeightSchedule.constant(0.3))
        assert all(v == 2.5 for v in series.values)

    def test_too_short_series(self):
        with pytest.raises(ValueError):
            moving_alpha_average([1.0, 2.0], 3, WeightSchedule.arithmetic())

    @pytest.mark.parametrize("family,schedule,alpha", FAMILIES)
    def test_ramp_shift_form(self, family, schedule, alpha):
        # On x[s] = s a window ending at n is the first-window average
        # shifted by n - N.
        xs = [float(s) for s in range(1, 41)]
        N = 7
        delta_n = closed_form_linear(family, N, alpha)
        series = moving_alpha_average(xs, N, schedule)
        for i, value in enumerate(series.values):
            n = N + i
            assert value == pytest.approx((n - N) + delta_n, abs=1e-10)

    @pytest.mark.parametrize("family,schedule,alpha", FAMILIES)
    def test_ramp_step_is_one(self, family, schedule, alpha):
        xs = [float(s) for s in range(1, 31)]
        series = moving_alpha_average(xs, 5, schedule)
        for prev, cur in zip(series.values, series.values[1:]):
            assert cur - prev == pytest.approx(1.0, abs=1e-10)

    def test_full_length_window_equals_plain_average(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randint(1, 60)
            xs = [rng.uniform(-10, 10) for _ in range(n)]
            schedule = WeightSchedule.constant(rng.uniform(0, 0.9))
            series = moving_alpha_average(xs, n, schedule)
            assert len(series.values) == 1
            assert series.values[0] == alpha_average(xs, schedule).limit

    def test_windows_match_per_window_definition(self):
        rng = random.Random(12)
        xs = [rng.uniform(-3, 3) for _ in range(50)]
        schedule = WeightSchedule.weighted_arithmetic()
        series = moving_alpha_average(xs, 6, schedule)
        for i, value in enumerate(series.values):
            assert value == window_alpha_average(xs, n=6 + i, N=6, alpha=schedule)

    def test_translation_equivariance_per_window(self):
        rng = random.Random(13)
        xs = [rng.uniform(-3, 3) for _ in range(40)]
        shifted = moving_alpha_average([x + 2.5 for x in xs], 9, WeightSchedule.constant(0.4))
        base = moving_alpha_average(xs, 9, WeightSchedule.constant(0.4))
        for u, v in zip(shifted.values, base.values):
            assert u == pytest.approx(v + 2.5, abs=1e-12)

    def test_window_bounds(self):
        rng = random.Random(14)
        xs = [rng.uniform(-50, 50) for _ in range(60)]
        N = 8
        series = moving_alpha_average(xs, N, WeightSchedule.arithmetic())
        for i, value in enumerate(series.values):
            window = xs[i : i + N]
            cushion = 1e-12 * max(1.0, max(abs(v) for v in window))
            assert min(window) - cushion <= value <= max(window) + cushion


class TestMea:
    def test_two_window(self):
        series = mea([1, 2, 3], 2, 0.5)
        assert series.values == (1.5, 2.5)

    def test_constant_series(self):
        series = mea([3.25] * 6, 3, 0.4)
        assert all(v == pytest.approx(3.25, abs=1e-15) for v in series.values)

    def test_full_window_equals_plain_exponential_average(self):
        series = mea([1, 2, 3], 3, 0.5)
        assert series.values == (pytest.approx(2.25, abs=1e-15),)

    def test_matches_windowed_recursion(self):
        rng = random.Random(15)
        for _ in range(50):
            n = rng.randint(1, 80)
            N = rng.randint(1, n)
            a = rng.uniform(0, 0.95)
            xs = [rng.uniform(-5, 5) for _ in range(n)]
            direct = mea(xs, N, a)
            windowed = moving_alpha_average(xs, N, WeightSchedule.constant(a))
            assert len(direct.values) == len(windowed.values)
            for u, v in zip(direct.values, windowed.values):
                assert abs(u - v) <= 1e-12

    def test_rejects_bad_weight(self):
        with pytest.raises(ValueError):
            mea([1, 2, 3], 2, 1.0)
        with pytest.raises(ValueError):
            mea([1, 2, 3], 2, -0.1)

    def test_rejects_short_series(self):
        with pytest.raises(ValueError):
            mea([1.0], 2, 0.5)
