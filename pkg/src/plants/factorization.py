"""
Factor pairs (n, d) over the half-plane Hardy algebra, and the evaluator
wrapper that every factor and plant transfer function is stored as.
"""

import numpy as np

from src.expr.evaluator import evaluate_array
from src.expr.outcome import EvalOutcome, EvalStatus, merge_status
from src.expr.parser import parse
from src.expr.printer import to_text
from src.plants.exceptions import FactorizationError

# Interior points of the right half-plane used to sanity check factor
# pairs. None of them are on the real axis, where the built-in plants
# keep their poles.
PROBE_POINTS = np.array(
    [complex(x, y) for x in (0.25, 1.0, 3.0, 10.0)
     for y in (-2.0, -0.5, 0.5, 2.0)])

PROBE_REL_TOL = 1e-8


class FactorEvaluator(object):
    """
    A function of s, evaluated over arrays of points.

    :attr func: Callable taking a complex array and returning a
        ``(values, statuses)`` pair of arrays.
    :attr str text: Formula text, when the function came from one.
    """

    def __init__(self, func, text=None):
        self.func = func
        self.text = text

    @classmethod
    def from_expr(cls, expr):
        """
        :param expr: An expression tree, or formula text to parse.
        :rtype: FactorEvaluator
        """

        if isinstance(expr, str):
            expr = parse(expr)
        return cls(lambda s: evaluate_array(expr, s), text=to_text(expr))

    @classmethod
    def constant(cls, value):
        value = complex(value)

        def func(s):
            s = np.asarray(s, dtype=complex)
            return (np.full(s.shape, value, dtype=complex),
                    np.zeros(s.shape, dtype=np.int8))
        return cls(func, text=repr(value))

    def sample(self, s):
        """
        :param s: Array-like of points.
        :rtype: tuple
        :returns: ``(values, statuses)``
        """

        values, statuses = self.func(np.asarray(s, dtype=complex))
        return np.asarray(values, dtype=complex), np.asarray(statuses, dtype=np.int8)

    def __call__(self, s):
        """
        Scalar evaluation.

        :rtype: EvalOutcome
        """

        values, statuses = self.sample(np.array([s], dtype=complex))
        return EvalOutcome.from_arrays(values, statuses)

    def times(self, other):
        """
        Pointwise product.

        :rtype: FactorEvaluator
        """

        def func(s):
            a, a_status = self.sample(s)
            b, b_status = other.sample(s)
            return a * b, merge_status(a_status, b_status)
        return FactorEvaluator(func)


class Factorization(object):
    """
    A coprime factor pair of a plant, p = n / d.

    :attr FactorEvaluator n: Numerator factor.
    :attr FactorEvaluator d: Denominator factor.
    :attr str label: Human readable name, e.g. ``diffusion(a=0.5)``.
    :attr bool claims_coprime: Whether the construction is known to give a
        coprime pair.
    :attr FactorEvaluator transfer: The plant itself, if known. Used by
        :py:meth:`check`.
    :attr dict params: Family parameters, for reports.
    """

    def __init__(self, n, d, label, claims_coprime=True, transfer=None,
                 params=None):
        self.n = n
        self.d = d
        self.label = label
        self.claims_coprime = claims_coprime
        self.transfer = transfer
        self.params = dict(params or {})

    def __repr__(self):
        return '<Factorization %s>' % self.label

    def sample(self, s):
        """
        Evaluates both factors.

        :rtype: tuple
        :returns: ``(n_values, d_values, statuses)``
        """

        n_values, n_status = self.n.sample(s)
        d_values, d_status = self.d.sample(s)
        return n_values, d_values, merge_status(n_status, d_status)

    def norm_squared(self, s):
        """
        |n|^2 + |d|^2 at the given points. Its boundary infimum is the
        coprimeness margin.

        :rtype: tuple
        :returns: ``(values, statuses)`` with real values.
        """

        n_values, d_values, statuses = self.sample(s)
        values = np.abs(n_values) ** 2 + np.abs(d_values) ** 2
        return values, statuses

    def scaled(self, unit, label=None):
        """
        Multiplies both factors by a common element. When ``unit`` is
        invertible in H-infinity this is another coprime factorization of
        the same plant.

        :param FactorEvaluator unit: The common factor.
        :rtype: Factorization
        """

        return Factorization(
            self.n.times(unit), self.d.times(unit),
            label or '%s*u' % self.label,
            claims_coprime=self.claims_coprime,
            transfer=self.transfer,
            params=self.params)

    def check(self, points=None):
        """
        Sanity probes on interior points: d must not vanish everywhere, and
        n/d must match :py:attr:`transfer` wherever both are evaluable.

        :raises: :py:exc:`FactorizationError`
        :returns: ``self``, so it can be chained after construction.
        """

        if points is None:
            points = PROBE_POINTS
        n_values, d_values, statuses = self.sample(points)
        ok = statuses == EvalStatus.OK
        if not np.any(ok & (np.abs(d_values) > 0)):
            raise FactorizationError(
                '%s: denominator vanishes on every probe point' % self.label)

        if self.transfer is None:
            return self

        p_values, p_status = self.transfer.sample(points)
        usable = ok & (p_status == EvalStatus.OK) & (np.abs(d_values) > 0)
        ratio = n_values[usable] / d_values[usable]
        expected = p_values[usable]
        error = np.abs(ratio - expected)
        scale = np.maximum(1.0, np.abs(expected))
        if np.any(error > PROBE_REL_TOL * scale):
            worst = int(np.argmax(error / scale))
            raise FactorizationError(
                '%s: n/d does not match the plant at s=%r (%r vs %r)' % (
                    self.label, points[usable][worst], ratio[worst],
                    expected[worst]))
        return self
