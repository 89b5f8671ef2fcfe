"""
Winding number and index tests. The test functions live on the disc unless
noted otherwise.
"""

import numpy as np

from src.utils.test_utils import NuGapTestCase
from src.index.exceptions import PhaseRefinementExhausted, ZeroNearContour
from src.index.pair import axis_floor, index_of_function, index_of_pair, pair_function
from src.index.report import FLAG_NONZERO_INDEX, FLAG_NOT_INVERTIBLE
from src.index.winding import winding_on_circle
from src.plants.delays import delay_pole_factorization
from src.plants.diffusion import diffusion_factorization


def power(k):
    return lambda z: z ** k


class WindingTests(NuGapTestCase):

    def wind(self, func, radius=0.9, **kwargs):
        return winding_on_circle(func, radius, cfg=self.cfg, **kwargs).winding

    def test_identity(self):
        self.assertEqual(self.wind(lambda z: z), 1)

    def test_powers(self):
        """
        z^k winds k times, negative k included.
        """
        for k in range(-3, 4):
            self.assertEqual(self.wind(power(k)), k)

    def test_near_cube(self):
        """
        The roots of z^3 + 1e-6 sit at modulus 0.01, all inside r = 0.99.
        """
        self.assertEqual(self.wind(lambda z: z ** 3 + 1e-6, 0.99), 3)

    def test_half_plane_range(self):
        self.assertEqual(self.wind(lambda z: 2 + z), 0)

    def test_min_max_modulus(self):
        result = winding_on_circle(lambda z: 2 + z, 0.5, cfg=self.cfg)
        self.assertClose(result.min_mod, 1.5, rel=1e-12)
        self.assertClose(result.max_mod, 2.5, rel=1e-12)

    def test_product_adds(self):
        """
        Winding of a product is the sum of the windings.
        """
        f = lambda z: z - 0.5
        g = lambda z: (z + 0.3) ** 2
        for radius in (0.6, 0.9, 0.99):
            self.assertEqual(self.wind(f, radius), 1)
            self.assertEqual(self.wind(g, radius), 2)
            self.assertEqual(self.wind(lambda z: f(z) * g(z), radius), 3)

    def test_product_with_conjugate(self):
        f = lambda z: z ** 2 - 0.25
        g = lambda z: np.conj(z + 0.1)
        self.assertEqual(self.wind(lambda z: f(z) * g(z)), 2 - 1)

    def test_conjugate_flips_sign(self):
        for func in (lambda z: z - 0.5, power(2), lambda z: (z + 0.2) ** 3):
            self.assertEqual(self.wind(lambda z: np.conj(func(z))),
                             -self.wind(func))

    def test_locally_constant(self):
        """
        A perturbation smaller than half the minimum modulus leaves the
        winding alone.
        """
        f = lambda z: z - 0.2
        min_mod = winding_on_circle(f, 0.9, cfg=self.cfg).min_mod
        eps = 0.45 * min_mod
        for h in (power(5), lambda z: np.exp(1j * 7 * np.angle(z)),
                  lambda z: -np.ones_like(z)):
            self.assertEqual(self.wind(lambda z: f(z) + eps * h(z)), 1)

    def test_zero_free_holomorphic(self):
        """
        exp of a bounded function has index 0 at every radius.
        """
        f = lambda z: np.exp(3 * z / (2 - z))
        for radius in self.cfg.circle_radii:
            self.assertEqual(self.wind(f, radius), 0)

    def test_interior_zero(self):
        f = lambda z: z - 0.5
        for radius in self.cfg.circle_radii:
            self.assertEqual(self.wind(f, radius), 1)

    def test_bisection_resolves_fast_phase(self):
        """
        z^130 on 256 samples turns more than pi per step, which principal
        increments alone would count backwards.
        """
        self.assertEqual(self.wind(power(130), 0.99, n=256), 130)

    def test_zero_on_contour(self):
        self.assertRaises(ZeroNearContour, winding_on_circle,
                          lambda z: z - 0.9, 0.9, None, self.cfg)

    def test_refinement_exhausted(self):
        cfg = self.cfg.with_overrides(max_bisection_depth=1)
        self.assertRaises(PhaseRefinementExhausted, winding_on_circle,
                          power(130), 0.99, 256, cfg)


class IndexOfFunctionTests(NuGapTestCase):

    def test_positive_real_part(self):
        """
        Re g > 0 on the half-plane gives index 0.
        """
        g = lambda s: (1 + 1 / (s + 1), np.zeros(s.shape, dtype=np.int8))
        report = index_of_function(g, self.cfg)
        self.assertTrue(report.stabilized)
        self.assertTrue(report.invertible)
        self.assertEqual(report.index, 0)
        self.assertTrue(report.holds)

    def test_positive_real_part_without_fast_path(self):
        g = lambda s: (1 + 1 / (s + 1), np.zeros(s.shape, dtype=np.int8))
        report = index_of_function(g, self.cfg, fast_path=False)
        self.assertEqual(report.windings, (0, 0, 0, 0))

    def test_disc_variable(self):
        """
        (s-1)/(s+1) is z itself, index 1.
        """
        g = lambda s: ((s - 1) / (s + 1), np.zeros(s.shape, dtype=np.int8))
        report = index_of_function(g, self.cfg)
        self.assertEqual(report.windings, (1, 1, 1, 1))
        self.assertEqual(report.index, 1)
        self.assertTrue(report.invertible)
        self.assertFalse(report.holds)
        self.assertEqual(report.failed_condition, FLAG_NONZERO_INDEX)

    def test_inner_function_not_invertible(self):
        """
        e^{-s} underflows to 0 near z = 1.
        """
        g = lambda s: (np.exp(-s), np.zeros(s.shape, dtype=np.int8))
        report = index_of_function(g, self.cfg)
        self.assertFalse(report.invertible)
        self.assertIsNone(report.index)
        self.assertEqual(report.failed_condition, FLAG_NOT_INVERTIBLE)

    def test_json_fields(self):
        g = lambda s: (1 + 1 / (s + 1), np.zeros(s.shape, dtype=np.int8))
        data = index_of_function(g, self.cfg).to_json()
        self.assertEqual(sorted(data), sorted(
            ['radii', 'windings', 'min_mods', 'stabilized', 'index', 'invertible']))
        self.assertEqual(data['radii'], [0.9, 0.99, 0.999, 0.9999])


class IndexOfPairTests(NuGapTestCase):

    def test_same_plant(self):
        """
        g = |n|^2 + |d|^2 is positive.
        """
        plant = diffusion_factorization(0.5)
        report = index_of_pair(plant, plant, self.cfg)
        self.assertTrue(report.holds)
        self.assertEqual(report.index, 0)

    def test_diffusion_pair(self):
        report = index_of_pair(diffusion_factorization(0.5),
                               diffusion_factorization(0.75), self.cfg)
        self.assertTrue(report.invertible)
        self.assertEqual(report.index, 0)

    def test_delay_mismatch_not_invertible(self):
        """
        g(iy) = 1 + e^{-iy} y^2/(1+y^2) comes within 1/(1+y^2) of 0 at
        every odd multiple of pi, which no circle inside the disc sees.
        """
        report = index_of_pair(delay_pole_factorization(1, 1),
                               delay_pole_factorization(2, 1), self.cfg)
        self.assertIs(report.holds, False)
        self.assertFalse(report.invertible)
        self.assertIsNone(report.index)
        self.assertEqual(report.failed_condition, FLAG_NOT_INVERTIBLE)
        self.assertTrue(report.axis_min_mod < 1e-3, report.axis_min_mod)
        self.assertEqual(report.windings, (0, 0, 0, 0))

    def test_axis_floor_recorded(self):
        report = index_of_pair(diffusion_factorization(0.5),
                               diffusion_factorization(0.75), self.cfg)
        self.assertTrue(report.axis_min_mod > 0.01, report.axis_min_mod)
        self.assertIn('axis_min_mod', report.to_json())

    def test_axis_floor_on_known_zero(self):
        """
        (s - i)/(s + 1) vanishes at y = 1, between two grid points.
        """
        g = lambda s: ((s - 1j) / (s + 1), np.zeros(s.shape, dtype=np.int8))
        floor, tolerance = axis_floor(g, self.cfg)
        self.assertClose(tolerance, 1e-6 * np.sqrt(2), rel=1e-3)
        self.assertTrue(floor < tolerance, (floor, tolerance))

    def test_pair_function_conjugates_first(self):
        plant = delay_pole_factorization(1, 1)
        s = np.array([0.5j, 2 + 1j])
        values, statuses = pair_function(plant, plant)(s)
        n, d, _ = plant.sample(s)
        self.assertClose(values, np.abs(n) ** 2 + np.abs(d) ** 2, rel=1e-14)
        self.assertClose(values.imag, 0.0, abs_tol=1e-15)
