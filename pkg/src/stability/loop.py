"""
Closed-loop stability of a plant p = nP/dP under a controller c = nC/dC.
Clearing denominators in 1 - pc gives

    Delta = dP dC - nP nC

and the four closed-loop entries

    nP nC / Delta    nP dC / Delta    nC dP / Delta    dP dC / Delta

The loop is stable when Delta is invertible with index 0, doesn't come
close to zero on the imaginary axis, and all four entries stay bounded
there.
"""

from dataclasses import dataclass, field

import numpy as np

from src.boundary.exceptions import AllPointsFailed, ExcessiveFailures
from src.boundary.grids import axis_grid_from_config
from src.boundary.sampling import sample
from src.boundary.search import adaptive_sup, inf_with_config
from src.expr.outcome import EvalStatus, merge_status
from src.index.pair import index_of_function
from src.utils import logger
from src.utils.config import NumericConfig
from src.utils.general import json_float

ENTRY_NAMES = ('pc', 'p', 'c', '1')

FLAG_DENOMINATOR = 'denominator-not-invertible-index-0'
FLAG_DENOMINATOR_ON_AXIS = 'denominator-vanishes-on-axis'
FLAG_UNBOUNDED_ENTRY = 'unbounded-entry'
FLAG_ENTRY_FAILURES = 'entry-evaluation-failures'


@dataclass(frozen=True)
class LoopReport(object):
    """
    :attr bool stable: The verdict.
    :attr tuple entry_sups: Axis supremum of each entry's modulus, inf when
        it couldn't be estimated.
    :attr WindingReport denominator: Index report for Delta.
    :attr tuple flags: Reasons the loop was judged unstable.
    :attr float denominator_floor: Axis infimum of |Delta|.
    """

    stable: bool
    entry_sups: tuple
    denominator: object
    flags: tuple = field(default_factory=tuple)
    denominator_floor: float = None

    def to_json(self):
        return {
            'stable': self.stable,
            'entry_sups': [json_float(v) for v in self.entry_sups],
            'denominator': self.denominator.to_json(),
            'flags': list(self.flags),
        }


def loop_denominator(P, C):
    """
    :returns: Vectorized function of s giving ``(Delta, statuses)``.
    """

    def delta(s):
        nP, dP, statusP = P.sample(s)
        nC, dC, statusC = C.sample(s)
        with np.errstate(all='ignore'):
            values = dP * dC - nP * nC
        return values, merge_status(statusP, statusC)
    return delta


def closed_loop_entries(P, C, s):
    """
    The four closed-loop entries at the given points, in the order of
    :py:data:`ENTRY_NAMES`.

    :rtype: tuple
    :returns: ``(values, statuses)``, values shaped (4, len(s)).
    """

    s = np.asarray(s, dtype=complex)
    nP, dP, statusP = P.sample(s)
    nC, dC, statusC = C.sample(s)
    statuses = merge_status(statusP, statusC)
    with np.errstate(all='ignore'):
        delta = dP * dC - nP * nC
        pole = np.abs(delta) == 0
        safe = np.where(pole, 1.0, delta)
        values = np.array([nP * nC, nP * dC, nC * dP, dP * dC]) / safe
    statuses = merge_status(statuses, np.where(pole, EvalStatus.POLE_HIT,
                                               EvalStatus.OK).astype(np.int8))
    return values, statuses


def _entry_sup(P, C, which, grid, cfg):
    def modulus(y):
        values, statuses = closed_loop_entries(P, C, 1j * np.asarray(y, dtype=float))
        return np.abs(values[which]), statuses

    try:
        estimate = adaptive_sup(modulus, grid, cfg.refine_iters,
                                candidates=cfg.refine_candidates,
                                failure_limit=cfg.loop_failure_fraction,
                                threads=cfg.threads, chunk_size=cfg.chunk_size)
    except (AllPointsFailed, ExcessiveFailures) as e:
        logger.warning('Entry %s: %s' % (ENTRY_NAMES[which], e))
        return float('inf'), True
    return estimate.value, False


def _denominator_floor(delta, grid, cfg):
    """
    Axis infimum of |Delta| and the tolerance it must clear. Zeros of Delta
    on the axis itself (a plant pole at s = 0 left alone, say) never show
    up as windings on circles inside the disc.
    """

    def modulus(y):
        values, statuses = delta(1j * np.asarray(y, dtype=float))
        return np.abs(values), statuses

    values, statuses = sample(modulus, grid.points, threads=cfg.threads,
                              chunk_size=cfg.chunk_size)
    ok = statuses == EvalStatus.OK
    max_mod = float(np.max(values[ok])) if np.any(ok) else 0.0
    try:
        floor = inf_with_config(modulus, grid, cfg).value
    except (AllPointsFailed, ExcessiveFailures) as e:
        logger.warning('Loop denominator on the axis: %s' % e)
        floor = 0.0
    return floor, cfg.invertibility_tolerance(max_mod)


def closed_loop_check(P, C, cfg=None):
    """
    :param Factorization P: The plant.
    :param Factorization C: The controller.
    :param NumericConfig cfg: Resolution and tolerances.
    :rtype: LoopReport
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = axis_grid_from_config(cfg)
    delta = loop_denominator(P, C)
    denominator = index_of_function(delta, cfg)
    floor, tolerance = _denominator_floor(delta, grid, cfg)

    flags = []
    if not denominator.holds:
        flags.append(FLAG_DENOMINATOR)
    if not floor > tolerance:
        flags.append(FLAG_DENOMINATOR_ON_AXIS)

    sups = []
    failed = False
    for which in range(len(ENTRY_NAMES)):
        value, entry_failed = _entry_sup(P, C, which, grid, cfg)
        sups.append(value)
        failed = failed or entry_failed
    if failed:
        flags.append(FLAG_ENTRY_FAILURES)
    if any(not v < cfg.loop_entry_sup_limit for v in sups):
        flags.append(FLAG_UNBOUNDED_ENTRY)

    stable = not flags
    logger.info('Loop %r with %r: %s' % (
        P, C, 'stable' if stable else 'unstable (%s)' % ', '.join(flags)))
    return LoopReport(stable, tuple(sups), denominator, tuple(flags), floor)
