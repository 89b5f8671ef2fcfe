"""
Winding numbers about 0 of functions on circles |z| = r inside the disc.

Phases are accumulated as principal-branch increments between neighbouring
samples. Any increment larger than the step cap gets the angle interval
halved, all such intervals at once per level, until every step is small
enough that no turn can hide between samples.
"""

from dataclasses import dataclass

import numpy as np

from src.boundary.exceptions import ExcessiveFailures
from src.boundary.grids import make_circle_grid
from src.boundary.sampling import sample
from src.expr.outcome import EvalStatus, count_failures
from src.index.exceptions import PhaseRefinementExhausted, ZeroNearContour
from src.utils import logger
from src.utils.config import NumericConfig

# Winding totals further than this from an integer are rejected.
MAX_TURN_RESIDUAL = 0.01


@dataclass(frozen=True)
class CircleWinding(object):
    """
    :attr float radius: Circle radius.
    :attr int winding: Counterclockwise turns about 0, ``None`` when the
        function came too close to 0 on the circle.
    :attr float min_mod: Smallest modulus seen, refinements included.
    :attr float max_mod: Largest modulus seen.
    :attr int samples: Points evaluated.
    :attr bool positive: The real part was positive on every sample, so
        the winding was taken as 0 without unwrapping.
    """

    radius: float
    winding: int
    min_mod: float
    max_mod: float
    samples: int
    positive: bool = False


def _evaluate(func, z, cfg):
    values, statuses = sample(func, z, threads=cfg.threads,
                              chunk_size=cfg.chunk_size)
    values = np.asarray(values, dtype=complex)
    bad = (statuses != EvalStatus.OK) | ~np.isfinite(values)
    if np.any(bad):
        statuses = np.where(bad & (statuses == EvalStatus.OK),
                            EvalStatus.INVALID, statuses)
        failures = count_failures(statuses)
        raise ExcessiveFailures(
            'Circle evaluation failed at %d of %d points: %r' % (
                np.count_nonzero(bad), len(z), failures),
            failures)
    return values


def sample_circle(func, radius, cfg, n=None):
    """
    :rtype: tuple
    :returns: ``(thetas, values)`` on the uniform circle grid.
    :raises: :py:exc:`BadGridRange`, :py:exc:`ExcessiveFailures`
    """

    circle = make_circle_grid(radius, n or cfg.circle_n)
    return circle.thetas, _evaluate(func, circle.points, cfg)


def _check_modulus(radius, min_mod, max_mod, cfg):
    tolerance = cfg.invertibility_tolerance(max_mod)
    if not min_mod > tolerance:
        raise ZeroNearContour(
            'Function within %g of zero on the circle r=%r (max modulus %g)' % (
                min_mod, radius, max_mod),
            radius, min_mod, max_mod)


def unwrap_winding(func, radius, thetas, values, cfg):
    """
    Winding number from samples already taken at ``thetas``, evaluating
    ``func`` again only at bisection midpoints.

    :rtype: CircleWinding
    :raises: :py:exc:`ZeroNearContour`, :py:exc:`PhaseRefinementExhausted`
    """

    # Close the loop with the theta = 0 sample.
    thetas = np.append(np.asarray(thetas, dtype=float), 2 * np.pi)
    values = np.append(np.asarray(values, dtype=complex), values[0])
    moduli = np.abs(values)
    min_mod = float(np.min(moduli))
    max_mod = float(np.max(moduli))
    _check_modulus(radius, min_mod, max_mod, cfg)

    depth = 0
    while True:
        steps = np.angle(values[1:] / values[:-1])
        wide = np.nonzero(np.abs(steps) > cfg.phase_step_cap)[0]
        if not len(wide):
            break
        if depth >= cfg.max_bisection_depth:
            raise PhaseRefinementExhausted(
                'r=%r: %d phase steps above %g after %d bisections' % (
                    radius, len(wide), cfg.phase_step_cap, depth))
        depth += 1
        mids = 0.5 * (thetas[wide] + thetas[wide + 1])
        mid_values = _evaluate(func, radius * np.exp(1j * mids), cfg)
        mid_moduli = np.abs(mid_values)
        min_mod = min(min_mod, float(np.min(mid_moduli)))
        max_mod = max(max_mod, float(np.max(mid_moduli)))
        _check_modulus(radius, min_mod, max_mod, cfg)
        thetas = np.insert(thetas, wide + 1, mids)
        values = np.insert(values, wide + 1, mid_values)

    turns = float(np.sum(steps)) / (2 * np.pi)
    winding = int(round(turns))
    if abs(turns - winding) >= MAX_TURN_RESIDUAL:
        raise PhaseRefinementExhausted(
            'r=%r: phase total %.6f turns is not an integer' % (radius, turns))
    if depth:
        logger.info('r=%r: winding %d after %d bisection levels, %d samples' % (
            radius, winding, depth, len(thetas) - 1))
    return CircleWinding(radius, winding, min_mod, max_mod, len(thetas) - 1)


def winding_on_circle(func, radius, n=None, cfg=None):
    """
    Winding number about 0 of ``func`` on the circle |z| = ``radius``.

    :param func: Vectorized function of the disc variable z, returning
        values or a ``(values, statuses)`` pair. Half-plane functions need
        composing with the Moebius map first.
    :param float radius: In (0, 1).
    :param int n: Initial sample count, defaults to ``cfg.circle_n``.
    :param NumericConfig cfg: Tolerances and limits.
    :rtype: CircleWinding
    :raises: :py:exc:`ZeroNearContour`, :py:exc:`PhaseRefinementExhausted`,
        :py:exc:`ExcessiveFailures`
    """

    cfg = cfg or NumericConfig.from_settings()
    thetas, values = sample_circle(func, radius, cfg, n=n)
    return unwrap_winding(func, radius, thetas, values, cfg)
