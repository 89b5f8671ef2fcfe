"""
Boundary infima: the real part of the pair function, and the coprimeness
margin of a single factorization.
"""

from dataclasses import dataclass

import numpy as np

from src.boundary.grids import axis_grid_from_config, make_axis_grid
from src.boundary.sampling import sample
from src.boundary.search import inf_with_config
from src.expr.outcome import EvalStatus
from src.index.pair import pair_function
from src.utils.config import NumericConfig

# Large-|s| margin check: where it starts, and the floor it must clear.
ASYMPTOTIC_FROM = 1e4
ASYMPTOTIC_FLOOR = 0.45


@dataclass(frozen=True)
class PositivityReport(object):
    """
    :attr bool holds: The infimum clears the invertibility tolerance.
    :attr float min_re: Infimum over the grid of Re g(iy).
    :attr float argmin: Where it was found.
    :attr float tolerance: The bar ``min_re`` had to clear.
    :attr SupEstimate estimate: The full search result.
    """

    holds: bool
    min_re: float
    argmin: float
    tolerance: float
    estimate: object

    def to_json(self):
        return {
            'holds': self.holds,
            'min_re': self.min_re,
            'argmin_y': self.argmin,
            'tolerance': self.tolerance,
        }


def re_positivity_check(F1, F2, grid=None, cfg=None):
    """
    Whether Re(conj(n1) n2 + conj(d1) d2) stays positive on the axis.
    A real part that only decays towards zero at the far end of the grid
    does not count as positive; it has to clear the same tolerance as an
    invertible function.

    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :param AxisGrid grid: Defaults to the grid from ``cfg``.
    :param NumericConfig cfg: Refinement and tolerance settings.
    :rtype: PositivityReport
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = grid or axis_grid_from_config(cfg)
    g = pair_function(F1, F2)

    def real_part(y):
        values, statuses = g(1j * np.asarray(y, dtype=float))
        return values.real, statuses

    values, statuses = sample(lambda y: g(1j * y), grid.points,
                              threads=cfg.threads, chunk_size=cfg.chunk_size)
    ok = (statuses == EvalStatus.OK) & np.isfinite(values)
    max_mod = float(np.max(np.abs(values[ok]))) if np.any(ok) else 0.0
    tolerance = cfg.invertibility_tolerance(max_mod)

    estimate = inf_with_config(real_part, grid, cfg)
    return PositivityReport(estimate.value > tolerance, estimate.value,
                            estimate.argmax, tolerance, estimate)


def coprimeness_margin(F, cfg=None, grid=None):
    """
    Infimum over the axis of |n|^2 + |d|^2.

    :param Factorization F: The plant.
    :rtype: SupEstimate
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = grid or axis_grid_from_config(cfg)
    return inf_with_config(
        lambda y: F.norm_squared(1j * np.asarray(y, dtype=float)), grid, cfg)


def asymptotic_margin(F, cfg=None, y_from=ASYMPTOTIC_FROM):
    """
    Infimum of |n|^2 + |d|^2 over |y| >= ``y_from``, up to the configured
    grid end.

    :rtype: SupEstimate
    :raises: :py:exc:`BadGridRange` if the grid ends before ``y_from``.
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = make_axis_grid(y_from, cfg.grid_ymax, max(cfg.grid_n // 4, 64))
    return inf_with_config(
        lambda y: F.norm_squared(1j * np.asarray(y, dtype=float)), grid, cfg)
