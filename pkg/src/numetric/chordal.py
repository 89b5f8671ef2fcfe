"""
The chordal density of two plants on the imaginary axis::

                |n1 d2 - n2 d1|
    ----------------------------------------
    sqrt(|n1|^2 + |d1|^2) sqrt(|n2|^2 + |d2|^2)

and its supremum over the axis, the chordal distance kappa.
"""

from dataclasses import dataclass

import numpy as np

from src.boundary.grids import axis_grid_from_config
from src.boundary.sampling import sample
from src.boundary.search import sup_with_config
from src.expr.outcome import EvalStatus, merge_status
from src.numetric.exceptions import NotCoprimeAtPoint, PointEvaluationFailed
from src.utils.config import NumericConfig

# e^{i pi/4}, sqrt(i).
_ZETA = np.exp(0.25j * np.pi)


def chordal_density(n1, d1, n2, d2):
    """
    Vectorized pointwise density from factor values. Points where a plant's
    factors both vanish get a not-coprime status.

    :rtype: tuple
    :returns: ``(values, statuses)``, values clipped to [0, 1].
    """

    with np.errstate(all='ignore'):
        numerator = np.abs(n1 * d2 - n2 * d1)
        norm1 = np.hypot(np.abs(n1), np.abs(d1))
        norm2 = np.hypot(np.abs(n2), np.abs(d2))
        denominator = norm1 * norm2
        degenerate = denominator == 0
        values = numerator / np.where(degenerate, 1.0, denominator)
    statuses = np.where(degenerate, EvalStatus.NOT_COPRIME, EvalStatus.OK)
    return np.minimum(values, 1.0), statuses.astype(np.int8)


def density_function(F1, F2):
    """
    :returns: Vectorized function of s giving the chordal density and
        statuses.
    """

    def func(s):
        n1, d1, status1 = F1.sample(s)
        n2, d2, status2 = F2.sample(s)
        values, statuses = chordal_density(n1, d1, n2, d2)
        statuses = merge_status(merge_status(status1, status2), statuses)
        return values, statuses
    return func


def axis_density_function(F1, F2):
    """
    The density as a function of y on s = iy.
    """

    density = density_function(F1, F2)
    return lambda y: density(1j * np.asarray(y, dtype=float))


def kappa_pointwise(F1, F2, s):
    """
    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :param complex s: The point.
    :rtype: float
    :raises: :py:exc:`NotCoprimeAtPoint`, :py:exc:`PointEvaluationFailed`
    """

    values, statuses = density_function(F1, F2)(np.array([s], dtype=complex))
    status = EvalStatus(int(statuses[0]))
    if status == EvalStatus.NOT_COPRIME:
        raise NotCoprimeAtPoint(
            'Both factors of a plant vanish at s=%r' % (s,), status)
    if status != EvalStatus.OK:
        raise PointEvaluationFailed(
            'Factor evaluation failed at s=%r: %s' % (s, status.reason), status)
    return float(values[0])


@dataclass(frozen=True)
class KappaResult(object):
    """
    :attr float value: The chordal distance.
    :attr float argmax: y where the supremum was found.
    :attr SupEstimate estimate: The full search result.
    :attr tuple sweep: ``(y, kappa)`` per grid point, y increasing, when
        requested.
    """

    value: float
    argmax: float
    estimate: object
    sweep: tuple = None


def kappa_sweep(F1, F2, grid, cfg):
    """
    The density at every grid point. Failed points come back as nan.

    :rtype: tuple
    """

    ys = grid.points
    values, statuses = sample(axis_density_function(F1, F2), ys,
                              threads=cfg.threads, chunk_size=cfg.chunk_size)
    values = np.where(statuses == EvalStatus.OK, values, np.nan)
    return tuple(zip(ys.tolist(), values.tolist()))


def kappa_distance(F1, F2, cfg=None, sweep=False, grid=None):
    """
    The chordal distance: supremum of the density over both halves of the
    imaginary axis.

    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :param NumericConfig cfg: Grid and refinement settings.
    :param bool sweep: Also return the density at every grid point.
    :param AxisGrid grid: Overrides the grid built from ``cfg``.
    :rtype: KappaResult
    :raises: :py:exc:`AllPointsFailed`, :py:exc:`ExcessiveFailures`,
        :py:exc:`BadGridRange`
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = grid or axis_grid_from_config(cfg)
    estimate = sup_with_config(axis_density_function(F1, F2), grid, cfg)
    points = kappa_sweep(F1, F2, grid, cfg) if sweep else None
    return KappaResult(estimate.value, estimate.argmax, estimate, points)


def specialized_diffusion_density(a, a_tilde, y):
    """
    The density of the diffusion plants for observation points ``a`` and
    ``a_tilde`` at s = iy, simplified by hand with w = sqrt(|y|) e^{i pi/4}::

        sqrt|y| |sinh w| |cosh(a w) - cosh(a~ w)|
        ---------------------------------------------------------------
        sqrt(|cosh(a w)|^2 + |y||sinh w|^2) sqrt(|cosh(a~ w)|^2 + |y||sinh w|^2)

    Computed with plain hyperbolic functions, so only good for |y| up to
    about 1e4. Used as an independent check on the general formula.

    :rtype: numpy.ndarray
    """

    y = np.abs(np.asarray(y, dtype=float))
    root = np.sqrt(y)
    w = root * _ZETA
    sinh_w = np.abs(np.sinh(w))
    cosh_a = np.cosh(a * w)
    cosh_b = np.cosh(a_tilde * w)
    numerator = root * sinh_w * np.abs(cosh_a - cosh_b)
    denominator = (np.sqrt(np.abs(cosh_a) ** 2 + y * sinh_w ** 2)
                   * np.sqrt(np.abs(cosh_b) ** 2 + y * sinh_w ** 2))
    return numerator / denominator
