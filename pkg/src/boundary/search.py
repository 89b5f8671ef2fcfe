"""
Supremum and infimum estimation over the imaginary axis. The grid is
sampled once, then the best candidates are polished with bounded
golden-section/Brent steps in log|y|.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

import settings
from src.boundary.exceptions import AllPointsFailed, ExcessiveFailures
from src.boundary.sampling import sample
from src.expr.outcome import EvalStatus, count_failures
from src.utils import logger


@dataclass(frozen=True)
class SupEstimate(object):
    """
    :attr float value: Best value found (max for sup, min for inf).
    :attr float argmax: The y where it was found.
    :attr int depth: Refinement rounds allowed per candidate.
    :attr dict failures: Skipped evaluation failures, reason -> count.
    :attr int samples: Grid samples evaluated, refinements excluded.
    :attr bool at_contour_end: The best value sits on |y| = y_min or y_max,
        so the true extremum may lie beyond the grid.
    """

    value: float
    argmax: float
    depth: int
    failures: dict = field(default_factory=dict)
    samples: int = 0
    at_contour_end: bool = False

    @property
    def failure_count(self):
        return sum(self.failures.values())


def _local_peaks(values, ok):
    """
    Indices of samples at least as large as their evaluable neighbours.
    """

    padded = np.where(ok, values, -np.inf)
    left = np.concatenate([[-np.inf], padded[:-1]])
    right = np.concatenate([padded[1:], [-np.inf]])
    return np.nonzero(ok & (padded >= left) & (padded >= right))[0]


def _pick_candidates(values, ok, count):
    peaks = _local_peaks(values, ok)
    order = peaks[np.argsort(-values[peaks], kind='stable')]
    chosen = list(order[:count])
    if len(chosen) < count:
        # Plateaus and monotone stretches give few strict peaks.
        rest = np.nonzero(ok)[0]
        rest = rest[np.argsort(-values[rest], kind='stable')]
        for index in rest:
            if len(chosen) >= count:
                break
            if index not in chosen:
                chosen.append(index)
    return chosen


def _extremum(func, grid, iters, sign, candidates, failure_limit, threads,
              chunk_size):
    """
    Shared body of :py:func:`adaptive_sup` and :py:func:`adaptive_inf`.
    ``sign`` is +1 for sup and -1 for inf; internally we always maximize
    ``sign * f``.
    """

    ys = grid.points
    values, statuses = sample(func, ys, threads=threads, chunk_size=chunk_size)
    values = np.asarray(values, dtype=float)
    ok = (statuses == EvalStatus.OK) & np.isfinite(values)
    # Non-finite values reported as OK still count as failures.
    statuses = np.where(ok | (statuses != EvalStatus.OK), statuses,
                        EvalStatus.INVALID)
    failures = count_failures(statuses)

    failed = int(len(ys) - np.count_nonzero(ok))
    if failed == len(ys):
        raise AllPointsFailed('Every one of the %d samples failed: %r' % (
            len(ys), failures))
    if failed > failure_limit * len(ys):
        raise ExcessiveFailures(
            '%d of %d samples failed (limit %.3g%%): %r' % (
                failed, len(ys), 100 * failure_limit, failures),
            failures)
    if failed:
        logger.warning('Skipped %d failed samples: %r' % (failed, failures))

    signed = sign * values
    best_index = int(np.argmax(np.where(ok, signed, -np.inf)))
    best_value = float(signed[best_index])
    best_y = float(ys[best_index])

    if iters > 0:
        magnitudes = np.abs(ys)
        half = len(ys) // 2
        for index in _pick_candidates(signed, ok, candidates):
            # Brackets stay inside one sign's half of the grid.
            lo = max(index - 1, 0 if index < half else half)
            hi = min(index + 1, half - 1 if index < half else len(ys) - 1)
            y_sign = math.copysign(1.0, ys[index])
            u_lo, u_hi = sorted((math.log(magnitudes[lo]), math.log(magnitudes[hi])))
            if u_hi <= u_lo:
                continue

            seen = []

            # Brent's tolerance is relative to the abscissa, so the bracket
            # is mapped to t in [0, 1] rather than searched in u directly.
            def objective(t, u_lo=u_lo, width=u_hi - u_lo, y_sign=y_sign,
                          seen=seen):
                y = y_sign * math.exp(u_lo + t * width)
                v, st = sample(func, np.array([y]))
                v = float(v[0])
                if st[0] != EvalStatus.OK or not math.isfinite(v):
                    return math.inf
                seen.append((sign * v, y))
                return -sign * v

            minimize_scalar(objective, bounds=(0.0, 1.0), method='bounded',
                            options={'maxiter': iters, 'xatol': 1e-12})
            for value, y in seen:
                if value > best_value:
                    best_value, best_y = value, y

    at_end = grid.is_end(best_y)
    if at_end:
        logger.warning('Extremum %.17g at y=%g sits on the contour end' % (
            sign * best_value, best_y))
    return SupEstimate(
        value=sign * best_value, argmax=best_y, depth=iters,
        failures=failures, samples=len(ys), at_contour_end=at_end)


def adaptive_sup(func, grid, iters, candidates=None, failure_limit=None,
                 threads=1, chunk_size=None):
    """
    Estimates sup over the axis grid of ``func(y)``.

    :param func: Vectorized function of real y returning values (non-finite
        marks a failure) or a ``(values, statuses)`` pair.
    :param AxisGrid grid: Where to sample.
    :param int iters: Refinement rounds per candidate.
    :param int candidates: How many grid maxima to refine.
    :param float failure_limit: Tolerated fraction of failed samples.
    :rtype: SupEstimate
    :raises: :py:exc:`AllPointsFailed`, :py:exc:`ExcessiveFailures`
    """

    return _extremum(
        func, grid, iters, 1.0,
        candidates or settings.GRID_REFINE_CANDIDATES,
        settings.FAILURE_FRACTION_LIMIT if failure_limit is None else failure_limit,
        threads, chunk_size or settings.SAMPLE_CHUNK_SIZE)


def adaptive_inf(func, grid, iters, candidates=None, failure_limit=None,
                 threads=1, chunk_size=None):
    """
    Mirror of :py:func:`adaptive_sup`; ``value`` and ``argmax`` describe
    the minimum.

    :rtype: SupEstimate
    """

    return _extremum(
        func, grid, iters, -1.0,
        candidates or settings.GRID_REFINE_CANDIDATES,
        settings.FAILURE_FRACTION_LIMIT if failure_limit is None else failure_limit,
        threads, chunk_size or settings.SAMPLE_CHUNK_SIZE)


def sup_with_config(func, grid, cfg):
    """
    :py:func:`adaptive_sup` with resolution and threading from a config.

    :rtype: SupEstimate
    """

    return adaptive_sup(func, grid, cfg.refine_iters,
                        candidates=cfg.refine_candidates,
                        failure_limit=cfg.failure_fraction_limit,
                        threads=cfg.threads, chunk_size=cfg.chunk_size)


def inf_with_config(func, grid, cfg):
    """
    :py:func:`adaptive_inf` with resolution and threading from a config.

    :rtype: SupEstimate
    """

    return adaptive_inf(func, grid, cfg.refine_iters,
                        candidates=cfg.refine_candidates,
                        failure_limit=cfg.failure_fraction_limit,
                        threads=cfg.threads, chunk_size=cfg.chunk_size)
