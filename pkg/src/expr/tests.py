import cmath
import math

import numpy as np

from src.utils.test_utils import NuGapTestCase
from src.expr import nodes
from src.expr.evaluator import Evaluator, conj_eval, eval, evaluate_array
from src.expr.exceptions import ExpressionSyntaxError, UnknownIdentifier
from src.expr.nodes import (
    Add, Apply, Const, Div, ImagUnit, Mul, Neg, Pow, Sub, Var)
from src.expr.outcome import EvalOutcome, EvalStatus, count_failures, merge_status
from src.expr.parser import parse
from src.expr.printer import to_text

S = Var()


def c(value):
    return Const(complex(value))


SQRT_S = Apply('sqrt', S)

# text -> expected tree
PARSER_FIXTURES = [
    ('s', S),
    ('i', ImagUnit()),
    ('2', c(2)),
    ('0.25', c(0.25)),
    ('1e-3', c(0.001)),
    ('2.5E+2', c(250)),
    ('pi', Const(complex(math.pi), name='pi')),
    ('euler', Const(complex(math.e), name='euler')),
    ('s+1', Add(S, c(1))),
    ('s-1-1', Sub(Sub(S, c(1)), c(1))),
    ('8/2/2', Div(Div(c(8), c(2)), c(2))),
    ('1+2*s', Add(c(1), Mul(c(2), S))),
    ('(1+2)*s', Mul(Add(c(1), c(2)), S)),
    ('-s^2', Neg(Pow(S, 2))),
    ('s^-2', Pow(S, -2)),
    ('--s', Neg(Neg(S))),
    ('2*i*s', Mul(Mul(c(2), ImagUnit()), S)),
    ('  exp( -s * 2 ) ', Apply('exp', Mul(Neg(S), c(2)))),
    ('sqrt(s)/(sqrt(s)+1)', Div(SQRT_S, Add(SQRT_S, c(1)))),
    ('cosh(0.5*sqrt(s))/(sqrt(s)*sinh(sqrt(s)))',
     Div(Apply('cosh', Mul(c(0.5), SQRT_S)),
         Mul(SQRT_S, Apply('sinh', SQRT_S)))),
    ('log(s)+tanh(s)', Add(Apply('log', S), Apply('tanh', S))),
]


class ParserTests(NuGapTestCase):

    def test_fixtures(self):
        for text, expected in PARSER_FIXTURES:
            self.assertEqual(parse(text), expected, text)

    def test_trailing_operator(self):
        try:
            parse('s +')
        except ExpressionSyntaxError as e:
            self.assertEqual(e.offset, 3)
            self.assertIn('number', e.expected)
            self.assertIn('(', e.expected)
            self.assertIn('offset 3', str(e))
        else:
            self.fail('parse accepted "s +"')

    def assertSyntaxError(self, text, offset):
        try:
            parse(text)
        except ExpressionSyntaxError as e:
            self.assertEqual(e.offset, offset, (text, str(e)))
            return e
        self.fail('parse accepted %r' % text)

    def test_error_offsets(self):
        self.assertSyntaxError('(s+1', 4)
        self.assertSyntaxError('s^2.5', 2)
        self.assertSyntaxError('s $ 1', 2)
        self.assertSyntaxError('sinh s', 5)
        self.assertSyntaxError('s 1', 2)
        self.assertSyntaxError('', 0)
        self.assertSyntaxError('s*)', 2)

    def test_byte_offsets(self):
        """
        Offsets count UTF-8 bytes: the no-break space takes two.
        """
        self.assertSyntaxError('\u00a0s +', 5)

    def test_integer_exponent(self):
        e = self.assertSyntaxError('s^s', 2)
        self.assertEqual(e.expected, ('integer',))

    def test_negative_exponent(self):
        tree = parse('s^-2')
        self.assertEqual(tree, Pow(S, -2))
        self.assertEqual(to_text(tree), '(s^-2)')
        self.assertEqual(parse(to_text(tree)), tree)
        values, _ = evaluate_array(parse(to_text(tree)), [2.0, 0.5j])
        self.assertClose(values, [0.25, -4.0], rel=1e-12)

        tree = parse('(s+1)^-3')
        self.assertEqual(parse(to_text(tree)), tree)
        self.assertSyntaxError('s^--2', 3)

    def test_unknown_identifier(self):
        e = self.assertSyntaxError('1+sqr(s)', 2)
        self.assertIsInstance(e, UnknownIdentifier)
        self.assertEqual(e.name, 'sqr')
        self.assertEqual(e.suggestion, 'sqrt')
        self.assertIn("did you mean 'sqrt'", str(e))

        e = self.assertSyntaxError('qqqqqqqq', 0)
        self.assertIsNone(e.suggestion)

    def test_unsupported_function_node(self):
        self.assertRaises(ValueError, Apply, 'sin', S)


class PrinterTests(NuGapTestCase):

    def test_round_trip(self):
        """
        Printed formulas parse back to the same tree, so they evaluate
        identically.
        """
        points = 1j * np.random.RandomState(7).uniform(-50, 50, 100)
        for text, _ in PARSER_FIXTURES:
            tree = parse(text)
            again = parse(to_text(tree))
            self.assertEqual(again, tree, (text, to_text(tree)))
            first, _ = evaluate_array(tree, points)
            second, _ = evaluate_array(again, points)
            np.testing.assert_array_equal(first, second)

    def test_negative_constants(self):
        tree = Mul(Const(complex(-2.5, 1.0)), S)
        self.assertEqual(to_text(tree), '(((-2.5)+1.0*i)*s)')
        values, _ = evaluate_array(parse(to_text(tree)), [1.0])
        self.assertClose(values, [complex(-2.5, 1.0)], rel=0, abs_tol=0)

    def test_full_precision(self):
        tree = c(1 / 3.0)
        self.assertEqual(parse(to_text(tree)), tree)
        self.assertEqual(to_text(Pow(S, -2)), '(s^-2)')


class EvalTests(NuGapTestCase):

    def test_sqrt_of_i(self):
        outcome = eval(SQRT_S, 1j)
        self.assertTrue(outcome.ok)
        self.assertClose(outcome.value, cmath.exp(0.25j * math.pi), rel=1e-15)

    def test_principal_branch_on_axis(self):
        ys = np.logspace(-6, 6, 121)
        plus, status = evaluate_array(SQRT_S, 1j * ys)
        minus, _ = evaluate_array(SQRT_S, -1j * ys)
        self.assertStatus(status, EvalStatus.OK)
        self.assertClose(plus, np.sqrt(ys) * np.exp(0.25j * np.pi), rel=1e-12)
        self.assertClose(minus, np.sqrt(ys) * np.exp(-0.25j * np.pi), rel=1e-12)

    def test_arg_pi_on_cut(self):
        """
        Arg lies in (-pi, pi], so points on the cut take Arg = pi even with
        a negative zero imaginary part.
        """
        self.assertClose(eval(SQRT_S, complex(-4.0, -0.0)).value, 2j, rel=0)
        self.assertClose(eval(Apply('log', S), complex(-1.0, -0.0)).value,
                         1j * math.pi, rel=1e-15)

    def test_branch_cut_reporting(self):
        strict = Evaluator(cut_tol=1e-9)
        _, status = strict.evaluate(SQRT_S, [-4.0, -4.0 + 1e-12j, 4.0, -4.0 + 1j])
        self.assertEqual(list(status), [
            EvalStatus.BRANCH_CUT_HIT, EvalStatus.BRANCH_CUT_HIT,
            EvalStatus.OK, EvalStatus.OK])

    def test_diffusion_transfer_at_one(self):
        tree = parse('cosh(0.5*sqrt(s))/(sqrt(s)*sinh(sqrt(s)))')
        value = eval(tree, 1.0).value
        self.assertClose(value, math.cosh(0.5) / math.sinh(1.0), rel=1e-14)

    def test_precedence_values(self):
        self.assertClose(eval(parse('-s^2'), 1j).value, 1.0, abs_tol=1e-15)
        self.assertClose(eval(parse('2^-1'), 0).value, 0.5, abs_tol=1e-15)
        self.assertClose(eval(parse('s-1-1'), 5).value, 3.0, rel=0)

    def test_pole(self):
        tree = parse('1/(s-1)')
        outcome = eval(tree, 1.0)
        self.assertFalse(outcome.ok)
        self.assertEqual(outcome.failure, EvalStatus.POLE_HIT)
        self.assertEqual(conj_eval(tree, 1.0).failure, EvalStatus.POLE_HIT)
        self.assertEqual(eval(parse('s^-1'), 0).failure, EvalStatus.POLE_HIT)
        self.assertEqual(eval(parse('log(s)'), 0).failure, EvalStatus.POLE_HIT)

    def test_overflow(self):
        outcome = eval(parse('exp(s)'), 400.0)
        self.assertEqual(outcome.failure, EvalStatus.OVERFLOW)
        self.assertTrue(eval(parse('exp(s)'), 300.0).ok)

    def test_first_failure_wins(self):
        values, status = evaluate_array(parse('exp(s)/(s-400)'), [400.0, 1.0])
        self.assertEqual(list(status), [EvalStatus.OVERFLOW, EvalStatus.OK])
        self.assertTrue(np.isnan(values[0]))

    def test_conj_eval(self):
        self.assertEqual(conj_eval(S, 1j).value, -1j)
        self.assertClose(conj_eval(SQRT_S, 1j).value,
                         math.sqrt(0.5) * (1 - 1j), rel=1e-15)

    def test_conjugate_symmetry(self):
        tree = parse('exp(-2*s)*sqrt(s)/(s+1) + log(s)*cosh(s/3) - tanh(s)')
        rs = np.random.RandomState(3)
        s = rs.uniform(0, 20, 200) + 1j * rs.uniform(-20, 20, 200)
        values, status = evaluate_array(tree, s)
        mirrored, mirrored_status = evaluate_array(tree, np.conj(s))
        ok = (status == EvalStatus.OK) & (mirrored_status == EvalStatus.OK)
        self.assertTrue(ok.all())
        self.assertClose(mirrored, np.conj(values), rel=1e-12)

    def test_deterministic(self):
        tree = parse(PARSER_FIXTURES[-2][0])
        s = 1j * np.logspace(-3, 3, 64)
        first, _ = evaluate_array(tree, s)
        second, _ = evaluate_array(tree, s)
        self.assertEqual(first.tobytes(), second.tobytes())

    def test_shapes(self):
        values, status = evaluate_array(parse('s+1'), np.ones((3, 4)))
        self.assertEqual(values.shape, (3, 4))
        self.assertEqual(status.shape, (3, 4))
        values, _ = evaluate_array(parse('2'), np.zeros(5))
        self.assertClose(values, [2.0] * 5, rel=0)


class OutcomeTests(NuGapTestCase):

    def test_exactly_one(self):
        self.assertRaises(ValueError, EvalOutcome)
        self.assertRaises(ValueError, EvalOutcome, 1.0, EvalStatus.POLE_HIT)
        self.assertEqual(EvalOutcome(value=2j).conjugate().value, -2j)

    def test_reasons(self):
        self.assertEqual(EvalStatus.POLE_HIT.reason, 'pole-hit')
        self.assertEqual(EvalStatus.BRANCH_CUT_HIT.reason, 'branch-cut-hit')

    def test_merge_and_count(self):
        first = np.array([0, 1, 0, 3], dtype=np.int8)
        second = np.array([2, 4, 0, 0], dtype=np.int8)
        merged = merge_status(first, second)
        self.assertEqual(list(merged), [2, 1, 0, 3])
        self.assertEqual(count_failures(merged), {
            'branch-cut-hit': 1, 'pole-hit': 1, 'overflow': 1})
        self.assertEqual(count_failures(np.zeros(4, dtype=np.int8)), {})

    def test_node_kinds(self):
        self.assertEqual(nodes.BINARY_NODES, (Add, Sub, Mul, Div))
