"""
Index of half-plane functions, and of the pair function

    g = conj(n1) n2 + conj(d1) d2

whose invertibility and zero index decide between the chordal distance
and 1.
"""

import math

import numpy as np

from src.boundary.exceptions import AllPointsFailed, ExcessiveFailures
from src.boundary.grids import axis_grid_from_config
from src.boundary.sampling import sample
from src.boundary.search import inf_with_config
from src.expr.outcome import EvalStatus, merge_status
from src.index.exceptions import PhaseRefinementExhausted, ZeroNearContour
from src.index.report import summarize
from src.index.winding import sample_circle, unwrap_winding
from src.plants.mobius import compose_on_disc
from src.utils import logger
from src.utils.config import NumericConfig


def pair_function(F1, F2):
    """
    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :returns: Vectorized function of s giving ``(g values, statuses)``.
    """

    def g(s):
        n1, d1, status1 = F1.sample(s)
        n2, d2, status2 = F2.sample(s)
        with np.errstate(all='ignore'):
            values = np.conj(n1) * n2 + np.conj(d1) * d2
        return values, merge_status(status1, status2)
    return g


def _circle_row(on_disc, radius, cfg, fast_path):
    try:
        thetas, values = sample_circle(on_disc, radius, cfg)
    except ExcessiveFailures as e:
        logger.warning('r=%r: %s' % (radius, e))
        return radius, None, float('nan'), float('nan')

    moduli = np.abs(values)
    if fast_path and np.all(values.real > 0):
        # A curve in the open right half-plane can't wind about 0.
        return radius, 0, float(np.min(moduli)), float(np.max(moduli))
    try:
        result = unwrap_winding(on_disc, radius, thetas, values, cfg)
    except ZeroNearContour as e:
        logger.warning(str(e))
        return radius, None, e.min_mod, e.max_mod
    except PhaseRefinementExhausted as e:
        logger.warning(str(e))
        return radius, None, float(np.min(moduli)), float(np.max(moduli))
    return radius, result.winding, result.min_mod, result.max_mod


def index_of_function(g, cfg=None, fast_path=True):
    """
    Winding numbers of a half-plane function over the configured circles,
    taken back to the disc through the Moebius map.

    :param g: Vectorized function of s returning ``(values, statuses)``.
    :param NumericConfig cfg: Radii, sample counts and tolerances.
    :param bool fast_path: Skip unwrapping on circles where Re g > 0.
    :rtype: WindingReport
    """

    cfg = cfg or NumericConfig.from_settings()
    on_disc = compose_on_disc(g)
    rows = [_circle_row(on_disc, r, cfg, fast_path) for r in cfg.circle_radii]
    report = summarize(rows, cfg.invertibility_tolerance)
    if not report.stabilized:
        logger.warning('Index not stabilized: windings %r, min moduli %r' % (
            list(report.windings), list(report.min_mods)))
    return report


def axis_floor(g, cfg):
    """
    Infimum of |g| over the axis grid and the tolerance it must clear.
    Zeros on the axis, and an infimum of 0 only approached as |y| grows,
    never show up on circles inside the disc.

    :param g: Vectorized function of s returning ``(values, statuses)``.
    :param NumericConfig cfg: Grid, refinement and tolerances.
    :rtype: tuple
    :returns: ``(floor, tolerance)``
    """

    grid = axis_grid_from_config(cfg)

    # |g|^2 is smooth at a zero, where |g| has a corner.
    def modulus_squared(y):
        values, statuses = g(1j * np.asarray(y, dtype=float))
        return np.abs(values) ** 2, statuses

    values, statuses = sample(modulus_squared, grid.points, threads=cfg.threads,
                              chunk_size=cfg.chunk_size)
    ok = (statuses == EvalStatus.OK) & np.isfinite(values)
    max_mod = math.sqrt(float(np.max(values[ok]))) if np.any(ok) else 0.0
    try:
        floor = math.sqrt(max(inf_with_config(modulus_squared, grid, cfg).value, 0.0))
    except (AllPointsFailed, ExcessiveFailures) as e:
        logger.warning('Pair function on the axis: %s' % e)
        floor = 0.0
    return floor, cfg.invertibility_tolerance(max_mod)


def index_of_pair(F1, F2, cfg=None):
    """
    Index report for conj(n1) n2 + conj(d1) d2. The circles decide the index; the axis infimum of |g| can still rule
    out invertibility.

    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :param NumericConfig cfg: Radii, sample counts and tolerances.
    :rtype: WindingReport
    """

    cfg = cfg or NumericConfig.from_settings()
    g = pair_function(F1, F2)
    report = index_of_function(g, cfg)
    floor, tolerance = axis_floor(g, cfg)
    if not floor > tolerance:
        logger.warning('Pair function drops to %.3g on the axis (tolerance %.3g)' % (
            floor, tolerance))
    return report.with_axis_floor(floor, tolerance)
