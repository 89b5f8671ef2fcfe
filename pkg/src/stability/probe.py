"""
Empirical robustness probe: how far from a stabilized plant can we move
before the same controller stops stabilizing? This only samples the
neighbours it is given, so the result is an exhibit, not a certified
stability margin.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from src.numetric.metric import nu_metric
from src.stability.exceptions import NominalLoopUnstable, RobustnessViolation
from src.stability.loop import closed_loop_check
from src.utils import logger
from src.utils.config import NumericConfig
from src.utils.general import json_float

PROBE_LABEL = 'empirical'

# Neighbours closer than this are the nominal plant for all practical
# purposes.
SAME_PLANT_DISTANCE = 1e-9


@dataclass(frozen=True)
class ProbeResult(object):
    """
    :attr str label: The neighbour's label.
    :attr float d: Its distance from the nominal plant.
    :attr bool stable: Whether the controller stabilizes it.
    :attr bool condition_held: Whether ``d`` is a chordal distance.
    :attr LoopReport loop: The closed-loop check.
    """

    label: str
    d: float
    stable: bool
    condition_held: bool
    loop: object

    def to_json(self):
        return {
            'plant': self.label,
            'd': json_float(self.d),
            'stable': self.stable,
            'condition_held': self.condition_held,
        }


@dataclass(frozen=True)
class ProbeReport(object):
    """
    :attr LoopReport nominal: The nominal loop.
    :attr tuple results: One :py:class:`ProbeResult` per neighbour, sorted
        by distance.
    :attr float frontier: Smallest distance at which a probed neighbour was
        destabilized, ``None`` if none was.
    :attr float stable_radius: Largest distance below the frontier at which
        every probed neighbour was stable, ``None`` if there is none.
    """

    nominal: object
    results: tuple
    frontier: float
    stable_radius: float
    label: str = PROBE_LABEL

    def to_json(self):
        return {
            'label': self.label,
            'nominal': self.nominal.to_json(),
            'results': [r.to_json() for r in self.results],
            'frontier': json_float(self.frontier),
            'stable_radius': json_float(self.stable_radius),
        }


def _probe_one(P, C, neighbor, cfg):
    report = nu_metric(P, neighbor, cfg)
    loop = closed_loop_check(neighbor, C, cfg)
    return ProbeResult(neighbor.label, report.d, loop.stable,
                       report.condition_held, loop)


def robustness_probe(P, C, neighbors, cfg=None):
    """
    Distance and closed-loop verdict for each neighbour of a stabilized
    plant.

    :param Factorization P: The nominal plant.
    :param Factorization C: A controller stabilizing it.
    :param list neighbors: Factorizations to probe.
    :param NumericConfig cfg: Resolution and tolerances.
    :rtype: ProbeReport
    :raises: :py:exc:`NominalLoopUnstable` if C doesn't stabilize P,
        :py:exc:`RobustnessViolation` if a neighbour at zero distance is
        destabilized.
    """

    cfg = cfg or NumericConfig.from_settings()
    nominal = closed_loop_check(P, C, cfg)
    if not nominal.stable:
        raise NominalLoopUnstable(
            '%r does not stabilize %r: %s' % (C, P, ', '.join(nominal.flags)),
            nominal)

    workers = max(1, min(cfg.threads, len(neighbors)))
    inner = cfg.with_overrides(threads=1) if workers > 1 else cfg
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda nb: _probe_one(P, C, nb, inner),
                                neighbors))
    results.sort(key=lambda r: r.d)

    for result in results:
        if not result.stable and result.d < SAME_PLANT_DISTANCE:
            raise RobustnessViolation(
                '%s is at distance %g from %r but is not stabilized' % (
                    result.label, result.d, P),
                results)

    unstable = [r.d for r in results if not r.stable]
    frontier = min(unstable) if unstable else None
    below = [r.d for r in results
             if r.stable and (frontier is None or r.d < frontier)]
    stable_radius = max(below) if below else None
    logger.info('Probe of %r: %d neighbours, frontier %r, stable up to %r' % (
        P, len(results), frontier, stable_radius))
    return ProbeReport(nominal, tuple(results), frontier, stable_radius)
