"""
Evaluation of expression trees, with principal branches for ``sqrt`` and
``log``. Everything is computed over numpy arrays of sample points; the
scalar :py:func:`eval` and :py:func:`conj_eval` are thin wrappers.

Failures never raise. Each sample carries an :py:class:`EvalStatus` and the
first failure along the evaluation wins.
"""

import numpy as np

import settings
from src.expr import nodes
from src.expr.outcome import EvalOutcome, EvalStatus, merge_status


def canonical(z):
    """
    Replaces negative zero imaginary parts by positive zero, so numpy's
    branch cuts agree with Arg in (-pi, pi]: sqrt(-1) is i, not -i.

    :rtype: numpy.ndarray
    """

    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    out.real = z.real
    out.imag = z.imag + 0.0
    return out


def principal_sqrt(z):
    return np.sqrt(canonical(z))


def principal_log(z):
    return np.log(canonical(z))


class Evaluator(object):
    """
    Walks an expression tree over an array of points.

    :attr float pole_tol: Denominators (and log arguments) below this
        modulus report a pole hit.
    :attr float cut_tol: sqrt/log arguments on the negative real axis
        within this distance of the cut report a branch cut hit. Zero turns
        the check off.
    :attr float overflow: Intermediate moduli above this report overflow.
    """

    def __init__(self, pole_tol=None, cut_tol=None, overflow=None):
        self.pole_tol = settings.POLE_TOLERANCE if pole_tol is None else pole_tol
        self.cut_tol = settings.BRANCH_CUT_TOLERANCE if cut_tol is None else cut_tol
        self.overflow = settings.OVERFLOW_THRESHOLD if overflow is None else overflow

    def evaluate(self, expr, s):
        """
        :param Expr expr: The tree to evaluate.
        :param s: Sample points (array-like of complex).
        :rtype: tuple
        :returns: ``(values, statuses)`` arrays shaped like ``s``. Values of
            failed samples are nan.
        """

        s = np.asarray(s, dtype=complex)
        with np.errstate(all='ignore'):
            values, statuses = self._walk(expr, s)
        values = np.where(statuses == EvalStatus.OK, values, np.nan + 0j)
        return values, statuses

    def _check(self, values, statuses):
        """
        Flags non-finite and oversized intermediates.
        """

        magnitude = np.abs(values)
        statuses = merge_status(
            statuses,
            np.where(np.isnan(values.real) | np.isnan(values.imag),
                     EvalStatus.INVALID, EvalStatus.OK))
        statuses = merge_status(
            statuses,
            np.where(np.isinf(magnitude) | (magnitude > self.overflow),
                     EvalStatus.OVERFLOW, EvalStatus.OK))
        return values, statuses.astype(np.int8)

    def _ok(self, s):
        return np.zeros(s.shape, dtype=np.int8)

    def _walk(self, expr, s):
        if isinstance(expr, nodes.Var):
            return s.copy(), self._ok(s)
        if isinstance(expr, nodes.Const):
            return np.full(s.shape, expr.value, dtype=complex), self._ok(s)
        if isinstance(expr, nodes.ImagUnit):
            return np.full(s.shape, 1j, dtype=complex), self._ok(s)
        if isinstance(expr, nodes.Neg):
            values, statuses = self._walk(expr.child, s)
            return -values, statuses
        if isinstance(expr, nodes.BINARY_NODES):
            return self._binary(expr, s)
        if isinstance(expr, nodes.Pow):
            return self._power(expr, s)
        if isinstance(expr, nodes.Apply):
            return self._apply(expr, s)
        raise TypeError('Not an expression node: %r' % (expr,))

    def _binary(self, expr, s):
        left, left_status = self._walk(expr.left, s)
        right, right_status = self._walk(expr.right, s)
        statuses = merge_status(left_status, right_status)

        if isinstance(expr, nodes.Add):
            values = left + right
        elif isinstance(expr, nodes.Sub):
            values = left - right
        elif isinstance(expr, nodes.Mul):
            values = left * right
        else:
            pole = np.abs(right) < self.pole_tol
            statuses = merge_status(
                statuses, np.where(pole, EvalStatus.POLE_HIT, EvalStatus.OK))
            values = left / np.where(pole, 1.0, right)
        return self._check(values, statuses)

    def _power(self, expr, s):
        base, statuses = self._walk(expr.base, s)
        if expr.exponent < 0:
            pole = np.abs(base) < self.pole_tol
            statuses = merge_status(
                statuses, np.where(pole, EvalStatus.POLE_HIT, EvalStatus.OK))
            base = np.where(pole, 1.0, base)
        values = base ** expr.exponent
        return self._check(values, statuses)

    def _apply(self, expr, s):
        arg, statuses = self._walk(expr.child, s)
        name = expr.function

        if name in ('sqrt', 'log'):
            if self.cut_tol > 0:
                on_cut = (arg.real < 0) & (np.abs(arg.imag) <= self.cut_tol)
                statuses = merge_status(
                    statuses,
                    np.where(on_cut, EvalStatus.BRANCH_CUT_HIT, EvalStatus.OK))
            if name == 'sqrt':
                values = principal_sqrt(arg)
            else:
                pole = np.abs(arg) < self.pole_tol
                statuses = merge_status(
                    statuses, np.where(pole, EvalStatus.POLE_HIT, EvalStatus.OK))
                values = principal_log(np.where(pole, 1.0, arg))
        elif name == 'exp':
            values = np.exp(arg)
        elif name == 'sinh':
            values = np.sinh(arg)
        elif name == 'cosh':
            values = np.cosh(arg)
        else:
            values = np.tanh(arg)
        return self._check(values, statuses)


DEFAULT_EVALUATOR = Evaluator()


def evaluate_array(expr, s):
    """
    Vectorized evaluation with the default tolerances.

    :rtype: tuple
    :returns: ``(values, statuses)``
    """

    return DEFAULT_EVALUATOR.evaluate(expr, s)


#noinspection PyShadowingBuiltins
def eval(expr, s):
    """
    Evaluates ``expr`` at a single point.

    :param Expr expr: The tree to evaluate.
    :param complex s: The point.
    :rtype: EvalOutcome
    """

    values, statuses = evaluate_array(expr, np.array([s], dtype=complex))
    return EvalOutcome.from_arrays(values, statuses)


def conj_eval(expr, s):
    """
    Complex conjugate of :py:func:`eval`. This is the pointwise involution
    on contour functions. Failures pass through untouched.

    :rtype: EvalOutcome
    """

    return eval(expr, s).conjugate()
