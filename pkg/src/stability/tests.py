"""
Closed-loop stability and robustness probe tests.

Stabilizing gains aren't given anywhere for these plants, so they are
documented here:

* retarded(0) with c = -2: the loop polynomial s + 2 - e^{-s} has no zeros
  in Re s >= 0, since |s + 2| >= 2 > |e^{-s}| there.
* diffusion(0.5): found by searching the gains in DIFFUSION_GAINS.
"""

import numpy as np

from src.utils.test_utils import NuGapTestCase, fast_config
from src.index.pair import index_of_function
from src.plants.delays import delay_pole_factorization, retarded_factorization
from src.plants.diffusion import diffusion_factorization
from src.plants.specs import expr_factorization, gain_factorization
from src.stability.exceptions import NominalLoopUnstable
from src.stability.loop import (
    FLAG_DENOMINATOR_ON_AXIS, closed_loop_check, closed_loop_entries)
from src.stability.probe import PROBE_LABEL, robustness_probe

RETARDED_GAIN = -2.0
DIFFUSION_GAINS = (-0.5, -1.0, -2.0)


class ClosedLoopTests(NuGapTestCase):

    def setUp(self):
        super(ClosedLoopTests, self).setUp()
        self.zero = gain_factorization(0)

    def test_stable_plant_zero_controller(self):
        plant = expr_factorization('1/(s+1)', '1')
        report = closed_loop_check(plant, self.zero, self.cfg)
        self.assertTrue(report.stable)
        self.assertClose(report.entry_sups, [0.0, 1.0, 0.0, 1.0], abs_tol=1e-9)
        self.assertEqual(report.flags, ())

    def test_unstable_plant_zero_controller(self):
        plant = expr_factorization('1/(s+1)', '(s-1)/(s+1)')
        report = closed_loop_check(plant, self.zero, self.cfg)
        self.assertFalse(report.stable)
        self.assertEqual(report.denominator.index, 1)

    def test_retarded_with_gain(self):
        report = closed_loop_check(retarded_factorization(0),
                                   gain_factorization(RETARDED_GAIN), self.cfg)
        self.assertTrue(report.stable, report.flags)
        self.assertTrue(all(v < 10 for v in report.entry_sups))

    def test_diffusion_gain_search(self):
        plant = diffusion_factorization(0.5)
        stable = [k for k in DIFFUSION_GAINS
                  if closed_loop_check(plant, gain_factorization(k), self.cfg).stable]
        self.assertTrue(stable)

    def test_zero_controller_matches_open_loop(self):
        """
        With c = 0 the loop denominator is dP itself.
        """
        plants = [
            expr_factorization('1/(s+1)', '1'),
            expr_factorization('1/(s+1)', '(s-1)/(s+1)'),
            delay_pole_factorization(1, 1),
            retarded_factorization(0.05),
        ]
        for plant in plants:
            open_loop = index_of_function(
                lambda s, plant=plant: plant.d.sample(s), self.cfg)
            loop = closed_loop_check(plant, self.zero, self.cfg)
            self.assertEqual(loop.stable, open_loop.holds, plant)

    def test_integrator_needs_feedback(self):
        """
        The diffusion plant has a pole at s = 0, on the axis itself.
        """
        report = closed_loop_check(diffusion_factorization(0.5), self.zero, self.cfg)
        self.assertFalse(report.stable)
        self.assertIn(FLAG_DENOMINATOR_ON_AXIS, report.flags)

    def test_entries(self):
        plant = retarded_factorization(0)
        s = np.array([0.5j, 2j, 1 + 1j])
        values, statuses = closed_loop_entries(
            plant, gain_factorization(RETARDED_GAIN), s)
        self.assertEqual(values.shape, (4, 3))
        expected_one = 1.0 / (s + 2 - np.exp(-s))
        self.assertClose(values[1], expected_one, rel=1e-12)
        self.assertClose(values[0], RETARDED_GAIN * expected_one, rel=1e-12)

    def test_json(self):
        plant = expr_factorization('1/(s+1)', '1')
        data = closed_loop_check(plant, self.zero, self.cfg).to_json()
        self.assertEqual(sorted(data), ['denominator', 'entry_sups', 'flags', 'stable'])
        self.assertEqual(len(data['entry_sups']), 4)


class RobustnessProbeTests(NuGapTestCase):

    def setUp(self):
        super(RobustnessProbeTests, self).setUp()
        self.cfg = fast_config(grid_n=512, circle_n=1024, refine_iters=20)
        self.plant = retarded_factorization(0)
        self.controller = gain_factorization(RETARDED_GAIN)

    def test_self(self):
        report = robustness_probe(self.plant, self.controller, [self.plant], self.cfg)
        self.assertEqual(len(report.results), 1)
        self.assertEqual(report.results[0].d, 0.0)
        self.assertTrue(report.results[0].stable)
        self.assertEqual(report.label, PROBE_LABEL)

    def test_near_neighbours(self):
        neighbors = [retarded_factorization(0.05), retarded_factorization(-0.05)]
        report = robustness_probe(self.plant, self.controller, neighbors, self.cfg)
        for result in report.results:
            self.assertTrue(result.stable)
            self.assertTrue(result.d < 0.05)
        self.assertIsNone(report.frontier)
        self.assertEqual(report.stable_radius, report.results[-1].d)

    def test_sorted_with_far_plant(self):
        """
        A delay plant is nowhere near the retarded one; the probe lists it
        last without claiming anything about it.
        """
        neighbors = [delay_pole_factorization(2, 1), retarded_factorization(0.05)]
        report = robustness_probe(self.plant, self.controller, neighbors, self.cfg)
        distances = [r.d for r in report.results]
        self.assertEqual(distances, sorted(distances))
        self.assertTrue(distances[-1] > 0.5)

    def test_diffusion_neighbours(self):
        plant = diffusion_factorization(0.5)
        gains = [k for k in DIFFUSION_GAINS
                 if closed_loop_check(plant, gain_factorization(k), self.cfg).stable]
        controller = gain_factorization(gains[0])
        neighbors = [diffusion_factorization(0.49), diffusion_factorization(0.51)]
        report = robustness_probe(plant, controller, neighbors, self.cfg)
        for result in report.results:
            self.assertTrue(result.stable)
            self.assertTrue(result.d < 0.05)

    def test_unstable_nominal(self):
        plant = expr_factorization('1/(s+1)', '(s-1)/(s+1)')
        self.assertRaises(NominalLoopUnstable, robustness_probe,
                          plant, gain_factorization(0), [plant], self.cfg)
