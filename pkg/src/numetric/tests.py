"""
Chordal distance and nu-metric tests. Closed-form reference values come
from plants whose chordal density can be maximized by hand.
"""

import math

import mpmath
import numpy as np

from src.utils.test_utils import NuGapTestCase, fast_config
from src.boundary.grids import make_axis_grid
from src.numetric.chordal import (
    chordal_density, kappa_distance, kappa_pointwise,
    specialized_diffusion_density)
from src.numetric.exceptions import NotCoprimeAtPoint
from src.index.report import FLAG_NOT_INVERTIBLE
from src.numetric.metric import nu_metric
from src.numetric.positivity import (
    asymptotic_margin, coprimeness_margin, re_positivity_check)
from src.plants.delays import (
    delay_pole_distance, delay_pole_factorization, delay_zero_distance,
    delay_zero_factorization, retarded_distance, retarded_factorization)
from src.plants.diffusion import diffusion_factorization
from src.plants.factorization import FactorEvaluator
from src.plants.specs import expr_factorization


def mp_diffusion_factors(a, s):
    """
    n_a(s), d_a(s) straight from the hyperbolic functions, at 50 digits.
    """
    with mpmath.workdps(50):
        w = mpmath.sqrt(mpmath.mpc(s))
        n = mpmath.sinh(a * w) / mpmath.sinh(w) / (w + 1)
        d = w / (w + 1) * mpmath.tanh(a * w)
        return n, d


def mp_density(a1, a2, s):
    with mpmath.workdps(50):
        n1, d1 = mp_diffusion_factors(mpmath.mpf(a1), s)
        n2, d2 = mp_diffusion_factors(mpmath.mpf(a2), s)
        numerator = abs(n1 * d2 - n2 * d1)
        denominator = (mpmath.sqrt(abs(n1) ** 2 + abs(d1) ** 2)
                       * mpmath.sqrt(abs(n2) ** 2 + abs(d2) ** 2))
        return float(numerator / denominator)


class ChordalDensityTests(NuGapTestCase):

    def test_identical_plants(self):
        plant = diffusion_factorization(0.5)
        for s in (0.3j, 1j, -40j, 2 + 5j):
            self.assertEqual(kappa_pointwise(plant, plant, s), 0.0)

    def test_opposite_signs(self):
        plus = expr_factorization('1', '1')
        minus = expr_factorization('1', '-1')
        for s in (1j, 0.5 - 3j):
            self.assertClose(kappa_pointwise(plus, minus, s), 1.0, rel=1e-15)

    def test_against_high_precision(self):
        """
        The stable factor evaluation matches a 50 digit transcription.
        """
        F1 = diffusion_factorization(0.5)
        F2 = diffusion_factorization(0.75)
        for s in (1j, 0.01j, -7j, 300j):
            self.assertClose(kappa_pointwise(F1, F2, s),
                             mp_density(0.5, 0.75, s), rel=1e-10)

    def test_specialized_formula(self):
        """
        The hand-simplified diffusion density agrees with the general one.
        """
        F1 = diffusion_factorization(0.5)
        F2 = diffusion_factorization(0.75)
        ys = np.array([0.01, 0.3, 1.0, 4.0, 25.0, 100.0])
        expected = specialized_diffusion_density(0.5, 0.75, ys)
        for y, value in zip(ys, expected):
            self.assertClose(kappa_pointwise(F1, F2, 1j * y), value, rel=1e-10)
        inside = kappa_pointwise(F1, F2, 1j)
        self.assertTrue(0.0 < inside < 1.0)

    def test_not_coprime_at_point(self):
        """
        n = s, d = s both vanish at 0.
        """
        bad = expr_factorization('s', 's')
        good = expr_factorization('1', '1')
        self.assertRaises(NotCoprimeAtPoint, kappa_pointwise, bad, good, 0j)

    def test_bounded(self):
        rng = np.random.RandomState(7)
        n1, d1, n2, d2 = (rng.randn(4, 500) + 1j * rng.randn(4, 500))
        values, _ = chordal_density(n1, d1, n2, d2)
        self.assertTrue(np.all(values >= 0.0))
        self.assertTrue(np.all(values <= 1.0))


class KappaDistanceTests(NuGapTestCase):

    def test_same_plant(self):
        plant = diffusion_factorization(0.5)
        self.assertEqual(kappa_distance(plant, plant, self.cfg).value, 0.0)

    def test_diffusion_pair(self):
        result = kappa_distance(diffusion_factorization(0.5),
                                diffusion_factorization(0.75), self.cfg)
        self.assertTrue(0.10 <= result.value <= 0.14, result.value)
        self.assertFalse(result.estimate.at_contour_end)

    def test_factorization_invariance(self):
        """
        Multiplying both factors by the unit (s+2)/(s+1) leaves kappa alone.
        """
        unit = FactorEvaluator.from_expr('(s+2)/(s+1)')
        base = diffusion_factorization(0.5)
        other = diffusion_factorization(0.75)
        plain = kappa_distance(base, other, self.cfg).value
        scaled = kappa_distance(base.scaled(unit), other, self.cfg).value
        self.assertTrue(abs(plain - scaled) < 1e-9, (plain, scaled))

    def test_resolution_stability(self):
        F1 = diffusion_factorization(0.5)
        F2 = diffusion_factorization(0.75)
        coarse = kappa_distance(F1, F2, self.cfg).value
        fine = kappa_distance(F1, F2, self.cfg.doubled()).value
        self.assertTrue(abs(fine - coarse) < 1e-4)
        self.assertTrue(fine >= coarse - 1e-9)

    def test_sweep(self):
        cfg = fast_config(grid_n=128)
        plant = diffusion_factorization(0.5)
        result = kappa_distance(plant, diffusion_factorization(0.75), cfg,
                                sweep=True)
        ys = [row[0] for row in result.sweep]
        self.assertEqual(len(ys), 256)
        self.assertEqual(ys, sorted(ys))
        self.assertTrue(max(row[1] for row in result.sweep) <= result.value)

        same = kappa_distance(plant, plant, cfg, sweep=True)
        self.assertTrue(all(row[1] == 0.0 for row in same.sweep))

    def test_delay_mismatch_reaches_one(self):
        result = kappa_distance(delay_pole_factorization(1, 1),
                                delay_pole_factorization(2, 1), self.cfg)
        self.assertTrue(result.value >= 0.99)


class PositivityTests(NuGapTestCase):

    def test_diffusion_pair(self):
        report = re_positivity_check(diffusion_factorization(0.5),
                                     diffusion_factorization(0.75), cfg=self.cfg)
        self.assertTrue(report.holds)
        self.assertTrue(report.min_re > 0)

    def test_same_plant_gives_margin(self):
        plant = diffusion_factorization(0.5)
        report = re_positivity_check(plant, plant, cfg=self.cfg)
        self.assertTrue(report.holds)
        margin = coprimeness_margin(plant, self.cfg)
        self.assertClose(report.min_re, margin.value, rel=1e-12)

    def test_delay_mismatch(self):
        """
        Re g dips to about 1/(1+y^2) wherever cos(y) = -1, which is below
        any sensible tolerance far out on the axis.
        """
        report = re_positivity_check(delay_pole_factorization(1, 1),
                                     delay_pole_factorization(2, 1), cfg=self.cfg)
        self.assertFalse(report.holds)
        self.assertTrue(report.min_re < report.tolerance)


class MarginTests(NuGapTestCase):

    def test_diffusion_margins(self):
        """
        |n_a|^2 + |d_a|^2 bottoms out around a^2/2 near y = 1/2.
        """
        for a in (0.1, 0.5, 0.9):
            margin = coprimeness_margin(diffusion_factorization(a), self.cfg)
            self.assertTrue(margin.value > 0.4 * a * a, (a, margin.value))
            self.assertTrue(margin.value < a * a)

    def test_large_frequency_margin(self):
        for a in (0.1, 0.5, 0.9):
            margin = asymptotic_margin(diffusion_factorization(a), self.cfg)
            self.assertTrue(margin.value >= 0.45, (a, margin.value))


class NuMetricTests(NuGapTestCase):

    def assertClosedForm(self, pairs, expected):
        """
        Each pair's distance is within 5e-3 of its closed form, and the
        error doesn't grow as the plants get closer.
        """
        errors = []
        for (F1, F2), value in zip(pairs, expected):
            report = nu_metric(F1, F2, self.cfg)
            self.assertTrue(report.condition_held, report.flags)
            errors.append(abs(report.d - value))
        for error in errors:
            self.assertTrue(error < 5e-3, errors)
        for farther, closer in zip(errors, errors[1:]):
            self.assertTrue(closer <= farther + 1e-9, errors)

    def test_diffusion_pair(self):
        report = nu_metric(diffusion_factorization(0.5),
                           diffusion_factorization(0.75), self.cfg)
        self.assertTrue(report.condition_held)
        self.assertTrue(0.10 <= report.d <= 0.14, report.d)
        self.assertEqual(report.d, report.kappa)

    def test_delay_pole_closed_form(self):
        base = delay_pole_factorization(1, 1)
        others = (1.05, 1.02, 1.01)
        self.assertClosedForm(
            [(base, delay_pole_factorization(1, a)) for a in others],
            [delay_pole_distance(1, a) for a in others])
        self.assertClose(delay_pole_distance(1, 1.05), 0.017246, rel=1e-4)

    def test_delay_zero_closed_form(self):
        base = delay_zero_factorization(1, 1, 0)
        zeros = (0.05, 0.02, 0.01)
        self.assertClosedForm(
            [(base, delay_zero_factorization(1, 1, b)) for b in zeros],
            [delay_zero_distance(1, b) for b in zeros])
        self.assertClose(delay_zero_distance(1, 0.05), 0.04994, rel=1e-4)

    def test_retarded_closed_form(self):
        base = retarded_factorization(0)
        deltas = (0.05, 0.02, 0.01)
        self.assertClosedForm(
            [(base, retarded_factorization(d)) for d in deltas],
            [retarded_distance(d) for d in deltas])
        self.assertClose(retarded_distance(0.05), 0.02438, rel=1e-3)

    def test_delay_mismatch(self):
        """
        The pair function touches 0 on the axis, where kappa reaches 1.
        """
        report = nu_metric(delay_pole_factorization(1, 1),
                           delay_pole_factorization(2, 1), self.cfg)
        self.assertFalse(report.condition_held)
        self.assertEqual(report.d, 1.0)
        self.assertEqual(report.failed_condition, FLAG_NOT_INVERTIBLE)
        self.assertTrue(report.kappa >= 0.99)

    def test_unstable_against_stable(self):
        """
        1/(s-1) against 1/(s+1): the pair function vanishes at s = 0.
        """
        unstable = expr_factorization('1/(s+1)', '(s-1)/(s+1)')
        stable = expr_factorization('1/(s+1)', '1')
        report = nu_metric(unstable, stable, self.cfg)
        self.assertFalse(report.condition_held)
        self.assertEqual(report.d, 1.0)

    def test_identity(self):
        cfg = fast_config(grid_n=256, circle_n=512, refine_iters=10)
        plants = ([diffusion_factorization(a) for a in (0.2, 0.35, 0.5, 0.65, 0.8)]
                  + [delay_pole_factorization(T, a) for T, a in
                     ((1, 1), (0.5, 2), (2, 0.5), (1, 3), (3, 1))]
                  + [delay_zero_factorization(T, a, b) for T, a, b in
                     ((1, 1, 0.1), (1, 1, -0.5), (2, 0.5, 1), (0.5, 2, 0), (1, 3, 2))]
                  + [retarded_factorization(d) for d in (-0.5, -0.1, 0, 0.05, 0.5)])
        for plant in plants:
            report = nu_metric(plant, plant, cfg)
            self.assertTrue(report.condition_held, plant)
            self.assertTrue(report.d < 1e-10, plant)

    def test_symmetry(self):
        pairs = [
            (diffusion_factorization(0.5), diffusion_factorization(0.75)),
            (delay_pole_factorization(1, 1), delay_pole_factorization(1, 1.05)),
            (retarded_factorization(0), retarded_factorization(0.05)),
        ]
        for F1, F2 in pairs:
            forward = nu_metric(F1, F2, self.cfg).d
            backward = nu_metric(F2, F1, self.cfg).d
            self.assertTrue(abs(forward - backward) < 1e-9, (F1, F2))

    def test_triangle_inequality(self):
        families = [
            [diffusion_factorization(a) for a in (0.3, 0.5, 0.7)],
            [delay_pole_factorization(1, a) for a in (1.0, 1.02, 1.05)],
        ]
        for plants in families:
            d = {}
            for i in range(3):
                for j in range(i + 1, 3):
                    d[i, j] = d[j, i] = nu_metric(plants[i], plants[j], self.cfg).d
            for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 0, 2)):
                self.assertTrue(d[i, k] <= d[i, j] + d[j, k] + 1e-6)

    def test_bounds(self):
        report = nu_metric(diffusion_factorization(0.2),
                           diffusion_factorization(0.9), self.cfg)
        self.assertTrue(0.0 <= report.kappa <= 1.0 + 1e-12)
        self.assertTrue(0.0 <= report.d <= 1.0 + 1e-12)

    def test_json(self):
        cfg = fast_config(grid_n=64)
        report = nu_metric(diffusion_factorization(0.5),
                           diffusion_factorization(0.75), cfg, sweep=True)
        data = report.to_json()
        for key in ('kappa', 'kappa_argmax_y', 'd', 'condition_held', 'index',
                    'margins', 'sweep', 'flags'):
            self.assertIn(key, data)
        self.assertEqual(sorted(data['margins']), ['p1', 'p2'])
        self.assertEqual(len(data['sweep']), 128)
        self.assertFalse(math.isnan(data['kappa']))
