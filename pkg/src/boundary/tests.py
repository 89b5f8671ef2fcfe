"""
Contour and supremum search tests.
"""

import numpy as np

from src.utils.test_utils import NuGapTestCase
from src.boundary.exceptions import AllPointsFailed, BadGridRange, ExcessiveFailures
from src.boundary.grids import make_axis_grid, make_circle_grid
from src.boundary.sampling import sample
from src.boundary.search import adaptive_inf, adaptive_sup
from src.expr.outcome import EvalStatus


def bump(y):
    return 1.0 / (1.0 + y * y)


def hump(y):
    return y / (1.0 + y * y)


class GridTests(NuGapTestCase):

    def test_default_grid(self):
        """
        The default range spans twelve decades.
        """
        grid = make_axis_grid(1e-6, 1e6, 4096)
        self.assertEqual(len(grid.positive), 4096)
        self.assertEqual(len(grid.points), 8192)
        self.assertEqual(grid.positive[0], 1e-6)
        self.assertEqual(grid.positive[-1], 1e6)

    def test_endpoints_exact(self):
        grid = make_axis_grid(1e-2, 1e2, 64)
        self.assertEqual(grid.positive[0], 1e-2)
        self.assertEqual(grid.positive[-1], 1e2)
        self.assertEqual(grid.points[0], -1e2)
        self.assertEqual(grid.points[-1], 1e2)

    def test_strictly_increasing(self):
        grid = make_axis_grid(1e-3, 1e3, 100)
        self.assertTrue(np.all(np.diff(grid.points) > 0))

    def test_doubled_grid_is_nested(self):
        coarse = make_axis_grid(1e-3, 1e3, 256)
        fine = make_axis_grid(1e-3, 1e3, 511)
        self.assertTrue(np.array_equal(fine.positive[::2], coarse.positive))

    def test_log_uniform(self):
        grid = make_axis_grid(1e-2, 1e2, 65)
        ratios = grid.positive[1:] / grid.positive[:-1]
        self.assertClose(ratios, ratios[0], rel=1e-9)

    def test_bad_ranges(self):
        self.assertRaises(BadGridRange, make_axis_grid, 1, 1, 64)
        self.assertRaises(BadGridRange, make_axis_grid, 2, 1, 64)
        self.assertRaises(BadGridRange, make_axis_grid, 0, 1, 64)
        self.assertRaises(BadGridRange, make_axis_grid, 1e-2, 1e2, 8)

    def test_circle(self):
        circle = make_circle_grid(0.9, 256)
        self.assertEqual(len(circle.points), 256)
        self.assertClose(np.abs(circle.points), 0.9)
        self.assertEqual(circle.thetas[0], 0.0)
        self.assertTrue(circle.thetas[-1] < 2 * np.pi)
        self.assertRaises(BadGridRange, make_circle_grid, 1.0, 256)
        self.assertRaises(BadGridRange, make_circle_grid, 0.5, 16)


class SamplingTests(NuGapTestCase):

    def test_threads_preserve_order(self):
        """
        Chunked, threaded sampling must give exactly what an inline call
        gives.
        """
        points = np.linspace(-5, 5, 5000)
        inline, inline_status = sample(hump, points)
        threaded, threaded_status = sample(hump, points, threads=4, chunk_size=333)
        self.assertTrue(np.array_equal(inline, threaded))
        self.assertTrue(np.array_equal(inline_status, threaded_status))

    def test_non_finite_marks_failure(self):
        values, statuses = sample(lambda y: 1.0 / y, np.array([0.0, 1.0]))
        self.assertEqual(statuses[0], EvalStatus.INVALID)
        self.assertEqual(statuses[1], EvalStatus.OK)

    def test_constant_broadcasts(self):
        values, statuses = sample(lambda y: 0.5, np.arange(10.0))
        self.assertEqual(values.shape, (10,))
        self.assertStatus(statuses, EvalStatus.OK)


class AdaptiveSupTests(NuGapTestCase):

    def setUp(self):
        super(AdaptiveSupTests, self).setUp()
        self.grid = make_axis_grid(1e-3, 1e3, 512)

    def test_max_at_contour_end(self):
        """
        1/(1+y^2) peaks at y = 0, outside the grid, so the best sample is
        the inner end and gets flagged.
        """
        est = adaptive_sup(bump, self.grid, 40)
        self.assertClose(est.value, 1.0 / (1.0 + 1e-6), rel=1e-15)
        self.assertClose(abs(est.argmax), 1e-3, rel=1e-12)
        self.assertTrue(est.at_contour_end)

    def test_constant(self):
        est = adaptive_sup(lambda y: np.full(y.shape, 0.5), self.grid, 40)
        self.assertEqual(est.value, 0.5)
        self.assertEqual(est.failure_count, 0)

    def test_refinement_finds_interior_peak(self):
        est = adaptive_sup(hump, self.grid, 40)
        self.assertTrue(abs(est.value - 0.5) < 1e-10)
        self.assertTrue(abs(est.argmax - 1.0) < 1e-4)
        self.assertFalse(est.at_contour_end)

    def test_never_loses_incumbent(self):
        func = lambda y: np.sin(3 * np.log(np.abs(y))) / (1 + 0.01 * np.abs(y))
        grid_max = np.max(func(self.grid.points))
        est = adaptive_sup(func, self.grid, 40)
        self.assertTrue(est.value >= grid_max)

    def test_no_refinement(self):
        est = adaptive_sup(hump, self.grid, 0)
        self.assertEqual(est.value, np.max(hump(self.grid.points)))

    def test_monotone_in_resolution(self):
        coarse = adaptive_sup(hump, make_axis_grid(1e-3, 1e3, 256), 20)
        fine = adaptive_sup(hump, make_axis_grid(1e-3, 1e3, 511), 40)
        self.assertTrue(fine.value >= coarse.value - 1e-12)

    def test_monotone_for_narrow_spike(self):
        """
        A spike much narrower than the grid step, sitting on a coarse grid
        point, is still seen after doubling.
        """
        coarse_grid = make_axis_grid(1e-3, 1e3, 256)
        centre = np.log(coarse_grid.positive[100])

        def spike(y):
            u = (np.log(np.abs(y)) - centre) / 1e-4
            return 0.1 + np.exp(-u * u)

        coarse = adaptive_sup(spike, coarse_grid, 20)
        fine = adaptive_sup(spike, make_axis_grid(1e-3, 1e3, 511), 40)
        self.assertClose(coarse.value, 1.1, rel=1e-12)
        self.assertTrue(fine.value >= coarse.value, (coarse.value, fine.value))

    def test_deterministic(self):
        first = adaptive_sup(hump, self.grid, 40, threads=3, chunk_size=100)
        second = adaptive_sup(hump, self.grid, 40)
        self.assertEqual(first.value, second.value)
        self.assertEqual(first.argmax, second.argmax)

    def test_failures_counted(self):
        """
        A couple of failed samples are skipped and reported.
        """
        bad = self.grid.points[[10, 500]]

        def func(y):
            values = hump(y)
            statuses = np.where(np.isin(y, bad), EvalStatus.POLE_HIT, EvalStatus.OK)
            return values, statuses

        est = adaptive_sup(func, self.grid, 10)
        self.assertEqual(est.failures, {'pole-hit': 2})
        self.assertTrue(abs(est.value - 0.5) < 1e-8)

    def test_all_failed(self):
        func = lambda y: np.full(y.shape, np.nan)
        self.assertRaises(AllPointsFailed, adaptive_sup, func, self.grid, 10)

    def test_excessive_failures(self):
        func = lambda y: np.where(np.abs(y) < 1, np.nan, 1.0)
        self.assertRaises(ExcessiveFailures, adaptive_sup, func, self.grid, 10)


class AdaptiveInfTests(NuGapTestCase):

    def setUp(self):
        super(AdaptiveInfTests, self).setUp()
        self.grid = make_axis_grid(1e-3, 1e3, 512)

    def test_min_at_contour_end(self):
        est = adaptive_inf(lambda y: -bump(y), self.grid, 40)
        self.assertClose(est.value, -1.0 / (1.0 + 1e-6), rel=1e-15)
        self.assertTrue(est.at_contour_end)

    def test_constant(self):
        est = adaptive_inf(lambda y: np.full(y.shape, 0.5), self.grid, 40)
        self.assertEqual(est.value, 0.5)

    def test_refinement_finds_interior_trough(self):
        est = adaptive_inf(hump, self.grid, 40)
        self.assertTrue(abs(est.value + 0.5) < 1e-10)
        self.assertTrue(abs(est.argmax + 1.0) < 1e-4)
