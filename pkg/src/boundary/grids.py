"""
Evaluation contours: log-uniform grids on the imaginary axis and uniform
circles inside the unit disc.
"""

from dataclasses import dataclass

import numpy as np

from src.boundary.exceptions import BadGridRange
from src.utils import logger

MIN_AXIS_POINTS = 64
MIN_CIRCLE_POINTS = 256


@dataclass(frozen=True, eq=False)
class AxisGrid(object):
    """
    Points y on the imaginary axis, log-uniform in |y| on [y_min, y_max],
    for both signs.

    :attr numpy.ndarray positive: Increasing y values, endpoints included.
    """

    y_min: float
    y_max: float
    count: int
    positive: np.ndarray

    @property
    def points(self):
        """
        All y values in increasing order: the mirrored negative half, then
        the positive half.

        :rtype: numpy.ndarray
        """

        return np.concatenate([-self.positive[::-1], self.positive])

    def is_end(self, y):
        """
        Whether ``y`` sits on one of the contour ends.

        :rtype: bool
        """

        magnitude = abs(y)
        return magnitude <= self.y_min or magnitude >= self.y_max


@dataclass(frozen=True)
class CircleGrid(object):
    """
    Uniformly spaced angles on the circle of the given radius.
    """

    radius: float
    count: int

    @property
    def thetas(self):
        return 2 * np.pi * np.arange(self.count) / self.count

    @property
    def points(self):
        return self.radius * np.exp(1j * self.thetas)


def make_axis_grid(y_min, y_max, n):
    """
    :param float y_min: Smallest |y|, > 0.
    :param float y_max: Largest |y|, > y_min.
    :param int n: Points per sign, >= 64.
    :rtype: AxisGrid
    :raises: :py:exc:`BadGridRange`
    """

    y_min = float(y_min)
    y_max = float(y_max)
    if not 0.0 < y_min < y_max or not np.isfinite(y_max):
        raise BadGridRange('Need 0 < y_min < y_max, got [%r, %r]' % (y_min, y_max))
    if int(n) < MIN_AXIS_POINTS:
        raise BadGridRange('Need at least %d points per sign, got %r' % (
            MIN_AXIS_POINTS, n))
    n = int(n)

    lo, hi = np.log10(y_min), np.log10(y_max)
    # k / (n - 1) is correctly rounded, so the grid for 2n - 1 points holds
    # every point of the grid for n bit for bit.
    positive = np.power(10.0, lo + (np.arange(n) / (n - 1)) * (hi - lo))
    positive[0] = y_min
    positive[-1] = y_max
    logger.info('Axis grid: %d points per sign on [%g, %g]' % (n, y_min, y_max))
    return AxisGrid(y_min, y_max, n, positive)


def make_circle_grid(radius, n):
    """
    :param float radius: In (0, 1).
    :param int n: Number of angles, >= 256.
    :rtype: CircleGrid
    :raises: :py:exc:`BadGridRange`
    """

    radius = float(radius)
    if not 0.0 < radius < 1.0:
        raise BadGridRange('Circle radius must lie in (0, 1), got %r' % radius)
    if int(n) < MIN_CIRCLE_POINTS:
        raise BadGridRange('Need at least %d points on a circle, got %r' % (
            MIN_CIRCLE_POINTS, n))
    return CircleGrid(radius, int(n))


def axis_grid_from_config(cfg):
    """
    :param NumericConfig cfg: Source of grid.ymin/ymax/n.
    :rtype: AxisGrid
    """

    return make_axis_grid(cfg.grid_ymin, cfg.grid_ymax, cfg.grid_n)
