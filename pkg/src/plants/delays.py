"""
Delay plants with known closed-form nu-metric values:

* pole location:  e^{-sT} s/(s-a)
* zero location:  e^{-sT} (s-b)/(s-a)
* retarded:       1/(s-(1+delta)e^{-s})

Each is factored by dividing numerator and denominator by s+1, which keeps
both factors bounded in the right half-plane. Factors are written as
formulas and go through the expression evaluator.
"""

import math

from src.plants.exceptions import ParameterRangeError
from src.plants.factorization import Factorization, FactorEvaluator


def _num(value):
    # Parenthesized so negative values parse as unary minus.
    return '(%r)' % float(value)


def _positive(name, value):
    value = float(value)
    if not value > 0 or math.isinf(value):
        raise ParameterRangeError('%s must be a positive number, got %r' % (name, value))
    return value


def _build(n_text, d_text, p_text, label, params):
    return Factorization(
        FactorEvaluator.from_expr(n_text),
        FactorEvaluator.from_expr(d_text),
        label,
        claims_coprime=True,
        transfer=FactorEvaluator.from_expr(p_text),
        params=params)


def delay_pole_factorization(T, a):
    """
    e^{-sT} s/(s-a) as n = e^{-sT} s/(s+1), d = (s-a)/(s+1).

    :param float T: Delay, > 0.
    :param float a: Unstable pole, > 0.
    :rtype: Factorization
    """

    T = _positive('T', T)
    a = _positive('a', a)
    return _build(
        'exp(-s*%s)*s/(s+1)' % _num(T),
        '(s-%s)/(s+1)' % _num(a),
        'exp(-s*%s)*s/(s-%s)' % (_num(T), _num(a)),
        'delay_pole(T=%r,a=%r)' % (T, a),
        {'T': T, 'a': a})


def delay_zero_factorization(T, a, b):
    """
    e^{-sT} (s-b)/(s-a) as n = e^{-sT} (s-b)/(s+1), d = (s-a)/(s+1).

    :param float T: Delay, > 0.
    :param float a: Unstable pole, > 0.
    :param float b: Zero location, any real.
    :rtype: Factorization
    """

    T = _positive('T', T)
    a = _positive('a', a)
    b = float(b)
    if math.isinf(b) or math.isnan(b):
        raise ParameterRangeError('b must be finite, got %r' % b)
    return _build(
        'exp(-s*%s)*(s-%s)/(s+1)' % (_num(T), _num(b)),
        '(s-%s)/(s+1)' % _num(a),
        'exp(-s*%s)*(s-%s)/(s-%s)' % (_num(T), _num(b), _num(a)),
        'delay_zero(T=%r,a=%r,b=%r)' % (T, a, b),
        {'T': T, 'a': a, 'b': b})


def retarded_factorization(delta):
    """
    1/(s-(1+delta)e^{-s}) as n = 1/(s+1), d = (s-(1+delta)e^{-s})/(s+1).

    :param float delta: Gain perturbation, |delta| < 1.
    :rtype: Factorization
    """

    delta = float(delta)
    if not abs(delta) < 1:
        raise ParameterRangeError('retarded delta must satisfy |delta| < 1, got %r' % delta)
    gain = _num(1 + delta)
    return _build(
        '1/(s+1)',
        '(s-%s*exp(-s))/(s+1)' % gain,
        '1/(s-%s*exp(-s))' % gain,
        'retarded(delta=%r)' % delta,
        {'delta': delta})


def delay_pole_distance(a, a_tilde):
    """
    Closed form nu-metric between two delay-pole plants with equal delays,
    valid for |a - a_tilde| small enough.

    :rtype: float
    """

    return abs(a - a_tilde) / (math.sqrt(2) * (a + a_tilde))


def delay_zero_distance(a, b):
    """
    Closed form nu-metric between zero-location plants with zeros at 0 and
    b, valid for |b| small enough.

    :rtype: float
    """

    return abs(b) / math.sqrt(b * b + a * a)


def retarded_distance(delta):
    """
    Closed form nu-metric between the retarded plants for 0 and delta,
    valid for |delta| small enough.

    :rtype: float
    """

    return abs(delta) / math.sqrt(2 * (1 + (1 + delta) ** 2))
