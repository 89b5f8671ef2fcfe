"""
The nu-metric: the chordal distance when conj(n1) n2 + conj(d1) d2 is
invertible with index 0, and 1 otherwise.
"""

from dataclasses import dataclass, field

from src.boundary.grids import axis_grid_from_config
from src.index.pair import index_of_pair
from src.numetric.chordal import kappa_distance
from src.numetric.positivity import coprimeness_margin
from src.utils import logger
from src.utils.config import NumericConfig
from src.utils.general import json_float, json_floats

FLAG_KAPPA_AT_END = 'kappa-unconverged-at-contour-end'
FLAG_SKIPPED_SAMPLES = 'skipped-samples'
FLAG_NOT_COPRIME = 'not-coprime'


@dataclass(frozen=True)
class NuReport(object):
    """
    Everything learned while computing one distance.

    :attr float kappa: Chordal distance.
    :attr float kappa_argmax_y: Where its supremum was found.
    :attr float d: The nu-metric value.
    :attr bool condition_held: Whether d is kappa (True) or 1 (False).
    :attr WindingReport index: Report for the pair function.
    :attr tuple margins: Coprimeness margins of the two plants.
    :attr tuple sweep: ``(y, kappa)`` per grid point, if requested.
    :attr tuple flags: Failed conditions and convergence remarks.
    :attr dict failures: Skipped evaluation failures, reason -> count.
    """

    kappa: float
    kappa_argmax_y: float
    d: float
    condition_held: bool
    index: object
    margins: tuple
    sweep: tuple = None
    flags: tuple = field(default_factory=tuple)
    failures: dict = field(default_factory=dict)

    @property
    def failed_condition(self):
        return None if self.condition_held else self.index.failed_condition

    def to_json(self):
        """
        :rtype: dict
        """

        data = {
            'kappa': json_float(self.kappa),
            'kappa_argmax_y': json_float(self.kappa_argmax_y),
            'd': json_float(self.d),
            'condition_held': self.condition_held,
            'index': self.index.to_json(),
            'margins': {'p1': json_float(self.margins[0]),
                        'p2': json_float(self.margins[1])},
            'flags': list(self.flags),
        }
        if self.sweep is not None:
            data['sweep'] = [json_floats(row) for row in self.sweep]
        return data


def _merge_failures(*dicts):
    merged = {}
    for counts in dicts:
        for reason, count in counts.items():
            merged[reason] = merged.get(reason, 0) + count
    return merged


def nu_metric(F1, F2, cfg=None, sweep=False):
    """
    :param Factorization F1: First plant.
    :param Factorization F2: Second plant.
    :param NumericConfig cfg: Resolution and tolerances.
    :param bool sweep: Record the density at every axis grid point.
    :rtype: NuReport
    :raises: :py:exc:`AllPointsFailed`, :py:exc:`ExcessiveFailures` when the
        chordal distance itself can't be estimated.
    """

    cfg = cfg or NumericConfig.from_settings()
    grid = axis_grid_from_config(cfg)

    index = index_of_pair(F1, F2, cfg)
    kappa = kappa_distance(F1, F2, cfg, sweep=sweep, grid=grid)
    margins = (coprimeness_margin(F1, cfg, grid),
               coprimeness_margin(F2, cfg, grid))

    flags = list(index.flags)
    if kappa.estimate.at_contour_end:
        flags.append(FLAG_KAPPA_AT_END)
    failures = _merge_failures(kappa.estimate.failures,
                               margins[0].failures, margins[1].failures)
    if failures:
        flags.append(FLAG_SKIPPED_SAMPLES)
    if any(not m.value > cfg.invertibility_abs_tol for m in margins):
        flags.append(FLAG_NOT_COPRIME)

    held = index.holds
    d = kappa.value if held else 1.0
    logger.info('%r vs %r: kappa=%.17g, condition %s, d=%.17g' % (
        F1, F2, kappa.value, 'held' if held else 'failed', d))
    return NuReport(
        kappa=kappa.value,
        kappa_argmax_y=kappa.argmax,
        d=d,
        condition_held=held,
        index=index,
        margins=(margins[0].value, margins[1].value),
        sweep=kappa.sweep,
        flags=tuple(flags),
        failures=failures)
