import cmath
import math

import numpy as np

from src.utils.test_utils import NuGapTestCase
from src.expr.outcome import EvalStatus
from src.plants.delays import (
    delay_pole_factorization, delay_zero_factorization, retarded_factorization)
from src.plants.diffusion import (
    diffusion_factorization, f_aux, g_aux, stable_and_naive_agree)
from src.plants.exceptions import (
    FactorizationError, MobiusPoleError, ParameterRangeError, PlantSpecError)
from src.plants.factorization import Factorization, FactorEvaluator
from src.plants.mobius import mobius_to_disc, mobius_to_halfplane
from src.plants.specs import (
    FAMILIES, PlantSpec, build_plant, default_factorizations,
    expr_factorization, gain_factorization, parse_plant_spec)

# Boundary points the scans run over.
BOUNDARY = 1j * np.concatenate([-np.logspace(-4, 4, 5000), np.logspace(-4, 4, 5000)])


def value_at(evaluator, s):
    outcome = evaluator(s)
    if not outcome.ok:
        raise AssertionError('evaluation failed at %r: %s' % (s, outcome.failure))
    return outcome.value


class DiffusionTests(NuGapTestCase):

    def test_values_at_one(self):
        F = diffusion_factorization(0.5)
        self.assertClose(value_at(F.n, 1.0), 0.5 * math.sinh(0.5) / math.sinh(1.0),
                         rel=1e-12)
        self.assertClose(value_at(F.d, 1.0), 0.5 * math.tanh(0.5), rel=1e-12)
        self.assertClose(value_at(F.d, 1.0), 0.23105, rel=1e-4)

    def test_ratio_is_plant(self):
        a = 0.3
        s = 1 + 1j
        F = diffusion_factorization(a)
        root = cmath.sqrt(s)
        expected = cmath.cosh(a * root) / (root * cmath.sinh(root))
        self.assertClose(value_at(F.n, s) / value_at(F.d, s), expected, rel=1e-12)

    def test_bounded_on_boundary(self):
        F = diffusion_factorization(0.5)
        n, d, statuses = F.sample(BOUNDARY)
        self.assertStatus(statuses, EvalStatus.OK)
        self.assertTrue(np.all(np.isfinite(n)) and np.all(np.isfinite(d)))
        self.assertTrue(np.max(np.abs(n)) < 2.0)
        self.assertTrue(np.max(np.abs(d)) < 2.0)

    def test_stable_matches_naive(self):
        ys = np.logspace(-3, 3, 400)
        for a in (0.1, 0.5, 0.9):
            agree, worst = stable_and_naive_agree(a, 1j * np.concatenate([-ys, ys]))
            self.assertTrue(agree, (a, worst))

    def test_removable_singularity(self):
        a = 0.4
        F = diffusion_factorization(a)
        s = np.array([0, 1e-8, 1e-8j, -1e-8j, 1e-12 + 1e-12j])
        n, d, statuses = F.sample(s)
        self.assertStatus(statuses, EvalStatus.OK)
        self.assertClose(n, [a] * len(s), rel=1e-3)
        self.assertTrue(np.all(np.abs(d) < 1e-4))
        self.assertEqual(d[0], 0)

    def test_asymptotics(self):
        z = 1e6 * np.exp(1j * np.pi / 8)
        for a in (0.1, 0.5, 0.9):
            self.assertTrue(abs(g_aux(a, z) - 1) < 1e-3)
            self.assertTrue(abs(f_aux(a, z)) < 1e-3)

    def test_margin_positive(self):
        for a in np.linspace(0.05, 0.95, 10):
            values, statuses = diffusion_factorization(a).norm_squared(BOUNDARY)
            self.assertStatus(statuses, EvalStatus.OK)
            self.assertTrue(np.min(values) > 0.4 * a * a, a)
            # |d| tends to 1 at both ends of the axis.
            far = values[[4999, -1]]
            self.assertTrue(np.all(far > 0.45), far)

    def test_continuity_in_parameter(self):
        a = 0.5
        base = diffusion_factorization(a)
        n0, d0, _ = base.sample(BOUNDARY)
        gaps = []
        for step in (0.1, 0.05, 0.025, 0.0125, 0.00625):
            n, d, _ = diffusion_factorization(a + step).sample(BOUNDARY)
            gaps.append(max(np.max(np.abs(n - n0)), np.max(np.abs(d - d0))))
        for farther, closer in zip(gaps, gaps[1:]):
            self.assertTrue(closer < farther, gaps)

    def test_parameter_range(self):
        for a in (0.0, 1.0, -0.2, 1.5):
            self.assertRaises(ParameterRangeError, diffusion_factorization, a)


class DelayTests(NuGapTestCase):

    def test_delay_pole_values(self):
        F = delay_pole_factorization(1, 2)
        self.assertClose(value_at(F.n, 1.0), math.exp(-1) / 2, rel=1e-14)
        self.assertClose(value_at(F.d, 1.0), -0.5, rel=1e-14)

        F = delay_pole_factorization(1, 1)
        ratio = value_at(F.n, 2.0) / value_at(F.d, 2.0)
        self.assertClose(ratio, 2 * math.exp(-2), rel=1e-14)

    def test_delay_zero(self):
        pole = delay_pole_factorization(1, 1)
        zero = delay_zero_factorization(1, 1, 0)
        s = BOUNDARY[::97]
        self.assertClose(zero.n.sample(s)[0], pole.n.sample(s)[0], rel=1e-14)

        F = delay_zero_factorization(1, 1, 0.1)
        s = 1 + 2j
        expected = cmath.exp(-s) * (s - 0.1) / (s - 1)
        self.assertClose(value_at(F.n, s) / value_at(F.d, s), expected, rel=1e-12)

    def test_retarded(self):
        for delta in (-0.5, 0.0, 0.05):
            F = retarded_factorization(delta)
            self.assertClose(value_at(F.d, 0.0), -(1 + delta), rel=1e-14)
        F = retarded_factorization(0)
        ratio = value_at(F.n, 1.0) / value_at(F.d, 1.0)
        self.assertClose(ratio, 1 / (1 - math.exp(-1)), rel=1e-14)

    def test_margins_positive(self):
        for F in (delay_pole_factorization(1, 1), delay_zero_factorization(1, 1, 0.1),
                  retarded_factorization(0)):
            values, statuses = F.norm_squared(BOUNDARY)
            self.assertStatus(statuses, EvalStatus.OK)
            self.assertTrue(np.min(values) > 1e-3, F)

    def test_parameter_range(self):
        self.assertRaises(ParameterRangeError, delay_pole_factorization, 0, 1)
        self.assertRaises(ParameterRangeError, delay_pole_factorization, 1, -1)
        self.assertRaises(ParameterRangeError, delay_zero_factorization, 1, 1, float('inf'))
        self.assertRaises(ParameterRangeError, retarded_factorization, 1.0)


class FactorizationTests(NuGapTestCase):

    def test_denominator_vanishes(self):
        self.assertRaises(FactorizationError, expr_factorization, '1', '0')

    def test_transfer_mismatch(self):
        F = Factorization(
            FactorEvaluator.from_expr('1/(s+1)'), FactorEvaluator.from_expr('1'),
            'wrong', transfer=FactorEvaluator.from_expr('1/(s+2)'))
        self.assertRaises(FactorizationError, F.check)

    def test_scaled(self):
        F = retarded_factorization(0.05)
        unit = FactorEvaluator.from_expr('(s+2)/(s+1)')
        G = F.scaled(unit)
        s = BOUNDARY[::211]
        n, d, _ = F.sample(s)
        n2, d2, _ = G.sample(s)
        self.assertClose(n2 / d2, n / d, rel=1e-12)
        self.assertIs(G.check(), G)

    def test_gain(self):
        C = gain_factorization(-2)
        n, d, statuses = C.sample([0, 1j, 5])
        self.assertClose(n, [-2] * 3, rel=0)
        self.assertClose(d, [1] * 3, rel=0)
        self.assertEqual(C.params, {'k': -2.0})


class MobiusTests(NuGapTestCase):

    def test_fixed_values(self):
        self.assertEqual(mobius_to_halfplane(0), 1)
        self.assertClose(mobius_to_disc(1j), 1j, rel=1e-15)

    def test_round_trip(self):
        rs = np.random.RandomState(11)
        radius = np.sqrt(rs.uniform(0, 0.999, 1000))
        z = radius * np.exp(2j * np.pi * rs.uniform(0, 1, 1000))
        back = np.array([mobius_to_disc(mobius_to_halfplane(p)) for p in z])
        self.assertTrue(np.max(np.abs(back - z)) < 1e-12)

    def test_circle_to_axis(self):
        for theta in np.linspace(0.1, 6.2, 25):
            s = mobius_to_halfplane(cmath.exp(1j * theta))
            self.assertTrue(abs(s.real) < 1e-12, s)

    def test_poles(self):
        self.assertRaises(MobiusPoleError, mobius_to_halfplane, 1)
        self.assertRaises(MobiusPoleError, mobius_to_disc, -1)


class PlantSpecTests(NuGapTestCase):

    def test_parse(self):
        self.assertEqual(parse_plant_spec('diffusion:a=0.5'),
                         PlantSpec('diffusion', {'a': 0.5}))
        self.assertEqual(parse_plant_spec(' delay_zero:b=0.2 ').params,
                         {'T': 1.0, 'a': 1.0, 'b': 0.2})
        self.assertEqual(parse_plant_spec('retarded').params, {'delta': 0.05})
        spec = parse_plant_spec('expr:n=1/(s+1);d=(s-1)/(s+1)')
        self.assertEqual(spec.params, {'n': '1/(s+1)', 'd': '(s-1)/(s+1)'})
        self.assertEqual(parse_plant_spec('gain:k=-2', controller=True).params,
                         {'k': -2.0})

    def test_to_text(self):
        for text in ('diffusion:a=0.5', 'delay_pole:T=1.0,a=2.0',
                     'expr:n=1/(s+1);d=1'):
            self.assertEqual(parse_plant_spec(text).to_text(), text)

    def test_errors(self):
        for text in ('difusion:a=0.5', 'diffusion:x=1', 'diffusion:a',
                     'diffusion:a=half', 'expr:n=1', 'expr:n=1;q=2',
                     'gain:k=1', 'expr:n=1/(s+;d=1'):
            self.assertRaises(PlantSpecError, build_plant, text)

    def test_suggestions(self):
        e = self.assertRaises(PlantSpecError, parse_plant_spec, 'delay_poel:T=1')
        self.assertIn("'delay_pole'", e.message)
        e = self.assertRaises(PlantSpecError, parse_plant_spec, 'delay_pole:T=1,aa=1')
        self.assertIn("did you mean 'a'", e.message)

    def test_build(self):
        F = build_plant('delay_pole:T=1,a=2')
        self.assertEqual(F.params, {'T': 1.0, 'a': 2.0})
        self.assertRaises(ParameterRangeError, build_plant, 'diffusion:a=1.5')
        self.assertEqual(build_plant('gain:k=0', controller=True).params, {'k': 0.0})

    def test_warnings(self):
        self.assertEqual(parse_plant_spec('diffusion:a=0.5').warnings(), [])
        self.assertEqual(len(parse_plant_spec('diffusion:a=0.9995').warnings()), 1)
        self.assertEqual(len(parse_plant_spec('diffusion:a=0.0005').warnings()), 1)
        self.assertEqual(parse_plant_spec('retarded').warnings(), [])

    def test_defaults(self):
        plants = default_factorizations()
        self.assertEqual(len(plants), len(FAMILIES))
        self.assertEqual(plants[0].label, 'diffusion(a=0.5)')
