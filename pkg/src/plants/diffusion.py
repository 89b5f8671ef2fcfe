"""
The diffusion plant with Neumann boundary control at x = 1 and point
observation at x = a::

    p_a(s) = cosh(a sqrt(s)) / (sqrt(s) sinh(sqrt(s)))

factored as::

    n_a(s) = 1/(sqrt(s)+1) * sinh(a sqrt(s)) / sinh(sqrt(s))
    d_a(s) = sqrt(s)/(sqrt(s)+1) * tanh(a sqrt(s))

The hyperbolic functions overflow long before the factors stop being
bounded, so everything here works in z = sqrt(s), which lies in the sector
|Arg z| <= pi/4 for s in the closed right half-plane, and uses
exponentially scaled forms:

    R_a(z) = sinh(az)/sinh(z) = e^{-(1-a)z} (1 - e^{-2az}) / (1 - e^{-2z})
    tanh(az) = (1 - e^{-2az}) / (1 + e^{-2az})

Near z = 0, R_a has a removable singularity and is taken as a ratio of
Taylor polynomials instead.
"""

import math

import numpy as np

import settings
from src.expr.evaluator import principal_sqrt
from src.expr.outcome import EvalStatus, merge_status
from src.plants.exceptions import ParameterRangeError
from src.plants.factorization import Factorization, FactorEvaluator
from src.utils import logger

# Formula text for the plain (overflow-prone) versions. Used for the plant
# transfer function and for cross-checking the stable evaluators.
TRANSFER_TEXT = 'cosh(%(a)r*sqrt(s))/(sqrt(s)*sinh(sqrt(s)))'
NAIVE_N_TEXT = '(1/(sqrt(s)+1))*sinh(%(a)r*sqrt(s))/sinh(sqrt(s))'
NAIVE_D_TEXT = '(sqrt(s)/(sqrt(s)+1))*sinh(%(a)r*sqrt(s))/cosh(%(a)r*sqrt(s))'

# Below this |w|, 1 - e^{-w} comes from its Taylor series.
_SMALL_EXPONENT = 1e-3


def check_parameter(a):
    """
    :raises: :py:exc:`ParameterRangeError` unless 0 < a < 1.
    :rtype: list
    :returns: Warnings for parameters very close to the ends of the range.
    """

    a = float(a)
    if not 0.0 < a < 1.0:
        raise ParameterRangeError(
            'diffusion observation point a must lie in (0, 1), got %r' % a)
    warnings = []
    margin = settings.PARAMETER_WARNING_MARGIN
    if a < margin or a > 1.0 - margin:
        warnings.append(
            'diffusion parameter a=%r is within %g of the end of (0, 1); '
            'the factors become badly scaled there' % (a, margin))
    return warnings


def one_minus_exp_neg(w):
    """
    1 - e^{-w} without cancellation for small |w|.

    :rtype: numpy.ndarray
    """

    w = np.asarray(w, dtype=complex)
    with np.errstate(all='ignore'):
        direct = 1.0 - np.exp(-w)
        series = w * (1 - w / 2 * (1 - w / 3 * (1 - w / 4 * (1 - w / 5))))
    return np.where(np.abs(w) < _SMALL_EXPONENT, series, direct)


def _taylor_coefficients(degree):
    # sinh(x)/x = sum x^{2k} / (2k+1)!, through x^degree.
    return [1.0 / math.factorial(2 * k + 1) for k in range(degree // 2 + 1)]


def _series_ratio(a, z, degree):
    """
    sinh(az)/sinh(z) as (sinh(az)/z) / (sinh(z)/z), each truncated to a
    polynomial of the given degree.
    """

    w = z * z
    coefficients = _taylor_coefficients(degree)
    numerator = np.zeros(z.shape, dtype=complex)
    denominator = np.zeros(z.shape, dtype=complex)
    for k in reversed(range(len(coefficients))):
        numerator = numerator * w + coefficients[k] * a ** (2 * k + 1)
        denominator = denominator * w + coefficients[k]
    return numerator / denominator


def r_ratio(a, z, pole_tol=None):
    """
    R_a(z) = sinh(az)/sinh(z) for z with Re z >= 0.

    :rtype: tuple
    :returns: ``(values, statuses)``
    """

    if pole_tol is None:
        pole_tol = settings.POLE_TOLERANCE
    z = np.asarray(z, dtype=complex)
    near_zero = np.abs(z) <= settings.DIFFUSION_SERIES_RADIUS

    with np.errstate(all='ignore'):
        denominator = one_minus_exp_neg(2 * z)
        pole = ~near_zero & (np.abs(denominator) < pole_tol)
        scaled = (np.exp(-(1 - a) * z) * one_minus_exp_neg(2 * a * z)
                  / np.where(pole, 1.0, denominator))
        series = _series_ratio(a, z, settings.DIFFUSION_SERIES_DEGREE)

    values = np.where(near_zero, series, scaled)
    statuses = np.where(pole, EvalStatus.POLE_HIT, EvalStatus.OK).astype(np.int8)
    return values, statuses


def tanh_scaled(w, pole_tol=None):
    """
    tanh(w) for Re w >= 0, as (1 - e^{-2w}) / (2 - (1 - e^{-2w})).

    :rtype: tuple
    :returns: ``(values, statuses)``
    """

    if pole_tol is None:
        pole_tol = settings.POLE_TOLERANCE
    numerator = one_minus_exp_neg(2 * np.asarray(w, dtype=complex))
    denominator = 2.0 - numerator
    pole = np.abs(denominator) < pole_tol
    with np.errstate(all='ignore'):
        values = numerator / np.where(pole, 1.0, denominator)
    statuses = np.where(pole, EvalStatus.POLE_HIT, EvalStatus.OK).astype(np.int8)
    return values, statuses


def f_aux(a, z):
    """
    (1+z)^{-1} R_a(z). Tends to 0 as z grows inside the sector.

    :rtype: numpy.ndarray
    """

    z = np.asarray(z, dtype=complex)
    values, _ = r_ratio(a, z)
    return values / (1 + z)


def g_aux(a, z):
    """
    z/(z+1) tanh(az). Tends to 1 as z grows inside the sector.

    :rtype: numpy.ndarray
    """

    z = np.asarray(z, dtype=complex)
    values, _ = tanh_scaled(a * z)
    return z / (z + 1) * values


def _numerator(a):
    def func(s):
        z = principal_sqrt(s)
        ratio, statuses = r_ratio(a, z)
        return ratio / (z + 1), statuses
    return func


def _denominator(a):
    def func(s):
        z = principal_sqrt(s)
        tanh_az, statuses = tanh_scaled(a * z)
        return z / (z + 1) * tanh_az, statuses
    return func


def naive_factors(a):
    """
    Straight transcriptions of n_a and d_a through the expression
    evaluator. They overflow for large |s|; only good for cross-checks.

    :rtype: tuple
    :returns: ``(n, d)`` as :py:class:`FactorEvaluator` instances.
    """

    return (FactorEvaluator.from_expr(NAIVE_N_TEXT % {'a': float(a)}),
            FactorEvaluator.from_expr(NAIVE_D_TEXT % {'a': float(a)}))


def transfer_function(a):
    """
    :rtype: FactorEvaluator
    """

    return FactorEvaluator.from_expr(TRANSFER_TEXT % {'a': float(a)})


def diffusion_factorization(a):
    """
    Coprime factorization (n_a, d_a) of the diffusion plant with stable
    evaluators.

    :param float a: Observation point, strictly inside (0, 1).
    :rtype: Factorization
    :raises: :py:exc:`ParameterRangeError`
    """

    for warning in check_parameter(a):
        logger.warning(warning)
    a = float(a)

    factorization = Factorization(
        FactorEvaluator(_numerator(a), text='n_a(s), a=%r' % a),
        FactorEvaluator(_denominator(a), text='d_a(s), a=%r' % a),
        'diffusion(a=%r)' % a,
        claims_coprime=True,
        transfer=transfer_function(a),
        params={'a': a})
    return factorization


def stable_and_naive_agree(a, s, rel_tol=1e-9):
    """
    Compares the stable factors to the naive transcription at the points
    ``s`` where the naive one is evaluable.

    :rtype: tuple
    :returns: ``(agree, worst_relative_error)``
    """

    stable = diffusion_factorization(a)
    naive_n, naive_d = naive_factors(a)
    worst = 0.0
    for mine, theirs in ((stable.n, naive_n), (stable.d, naive_d)):
        values, statuses = mine.sample(s)
        reference, ref_statuses = theirs.sample(s)
        usable = (merge_status(statuses, ref_statuses) == EvalStatus.OK)
        if not np.any(usable):
            continue
        error = np.abs(values[usable] - reference[usable])
        scale = np.maximum(np.abs(reference[usable]), 1e-300)
        worst = max(worst, float(np.max(error / scale)))
    return worst <= rel_tol, worst
