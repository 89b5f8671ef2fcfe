"""
The built-in property suite behind ``nugap verify``. Each check runs at
the configured resolution and reports pass/fail with a short detail line;
a check that raises counts as failed.
"""

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from src.boundary.grids import axis_grid_from_config, make_axis_grid
from src.boundary.search import sup_with_config
from src.expr.outcome import merge_status
from src.index.pair import index_of_function
from src.numetric.chordal import kappa_distance
from src.numetric.metric import nu_metric
from src.numetric.positivity import (
    ASYMPTOTIC_FLOOR, asymptotic_margin, coprimeness_margin, re_positivity_check)
from src.plants.delays import (
    delay_pole_distance, delay_pole_factorization, delay_zero_distance,
    delay_zero_factorization, retarded_distance, retarded_factorization)
from src.plants.diffusion import diffusion_factorization, stable_and_naive_agree
from src.plants.factorization import FactorEvaluator
from src.utils import logger
from src.utils.exceptions import NuGapException

# The diffusion pair the suite measures, and the band its distance must
# fall in.
DIFFUSION_PAIR = (0.5, 0.75)
DIFFUSION_PAIR_BAND = (0.10, 0.14)

CLOSED_FORM_TOLERANCE = 5e-3
RESOLUTION_TOLERANCE = 1e-4
CONTINUITY_STEPS = (0.1, 0.01, 0.001)
# Slack for "doesn't grow" comparisons between nearly equal estimates.
MONOTONE_SLACK = 1e-9

IDENTITY_TOLERANCE = 1e-10
SYMMETRY_TOLERANCE = 1e-9
TRIANGLE_SLACK = 1e-6
DELAY_POLE_TRIPLE = (1.0, 1.02, 1.05)

# |n_a| and |d_a| never reach this on the axis.
BOUNDEDNESS_LIMIT = 2.0

# Where the plain diffusion formulas are still evaluable.
NAIVE_BAND = (1e-3, 1e3)
NAIVE_BAND_POINTS = 400
NAIVE_REL_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult(object):
    """
    :attr str name: Check name, as shown in the table.
    :attr bool passed: The verdict.
    :attr str detail: One line of supporting numbers or the error message.
    """

    name: str
    passed: bool
    detail: str

    def to_json(self):
        return {'check': self.name, 'passed': self.passed, 'detail': self.detail}


def _diffusion_params(plants):
    return [F.params['a'] for F in plants
            if F.label.startswith('diffusion') and 'a' in F.params]


def check_diffusion_pair(cfg, plants):
    a1, a2 = DIFFUSION_PAIR
    report = nu_metric(diffusion_factorization(a1),
                       diffusion_factorization(a2), cfg)
    lo, hi = DIFFUSION_PAIR_BAND
    passed = report.condition_held and lo <= report.d <= hi
    return passed, 'd(%g, %g) = %.6f, condition %s' % (
        a1, a2, report.d, 'held' if report.condition_held else 'failed')


def check_margins(cfg, plants):
    details = []
    passed = True
    for F in plants:
        margin = coprimeness_margin(F, cfg).value
        details.append('%s: %.3g' % (F.label, margin))
        passed = passed and margin > cfg.invertibility_abs_tol
    return passed, '; '.join(details)


def check_asymptotics(cfg, plants):
    params = _diffusion_params(plants)
    if not params:
        return True, 'no diffusion plants given'
    details = []
    passed = True
    for a in params:
        margin = asymptotic_margin(diffusion_factorization(a), cfg).value
        details.append('a=%g: %.4f' % (a, margin))
        passed = passed and margin >= ASYMPTOTIC_FLOOR
    return passed, '; '.join(details)


def check_continuity(cfg, plants):
    """
    Chordal distance to a diffusion plant shrinks with the parameter step.
    """

    a = (_diffusion_params(plants) or [DIFFUSION_PAIR[0]])[0]
    base = diffusion_factorization(a)
    distances = []
    for step in CONTINUITY_STEPS:
        other = a + step if a + step < 1.0 else a - step
        distances.append(kappa_distance(
            base, diffusion_factorization(other), cfg).value)
    shrinking = all(closer <= farther + MONOTONE_SLACK
                    for farther, closer in zip(distances, distances[1:]))
    passed = shrinking and distances[-1] < 0.01
    return passed, 'a=%g: %s' % (a, ', '.join('%.3g' % d for d in distances))


# formula -> expected index, None for "not invertible"
INDEX_CASES = OrderedDict([
    ('(s+2)/(s+1)', 0),
    ('(s-1)/(s+1)', 1),
    ('((s-1)/(s+1))^2', 2),
    ('((s-1)/(s+1))*((s-2)/(s+2))*((s-3)/(s+3))', 3),
    ('exp(-s)', None),
])

# Indices 1 and 2; conjugated, -1 and -2.
CONJUGATION_CASES = ('(s-1)/(s+1)', '((s-1)/(s+1))^2*(s+2)/(s+1)')

# z^2 on the disc, nudged by a multiple of 1/(s+1), whose modulus is below 1
# on the right half-plane.
LOCAL_CONSTANCY_BASE = '((s-1)/(s+1))^2'
LOCAL_CONSTANCY_NUDGE = '1/(s+1)'
LOCAL_CONSTANCY_FRACTION = 0.9

# Real part bounded below by 1 and by 1/2.
POSITIVE_CASES = ('(s+2)/(s+1)', '1+exp(-s)/2')


def _winding_sample(text):
    return FactorEvaluator.from_expr(text).sample


def check_index_axioms(cfg, plants):
    """
    Known indices: units have index 0, each Blaschke factor adds one, and
    a function decaying along the axis is not invertible.
    """

    details = []
    passed = True
    for text, expected in INDEX_CASES.items():
        report = index_of_function(_winding_sample(text), cfg)
        if expected is None:
            ok = not report.invertible
        else:
            ok = report.invertible and report.stabilized and report.index == expected
        passed = passed and ok
        details.append('%s -> %s' % (
            text, report.index if report.invertible else 'not invertible'))
    return passed, '; '.join(details)


def check_index_conjugation(cfg, plants):
    """
    Conjugating the values flips the sign of the index.
    """

    details = []
    passed = True
    for text in CONJUGATION_CASES:
        sample = _winding_sample(text)

        def conjugated(s, sample=sample):
            values, statuses = sample(s)
            return np.conj(values), statuses

        index = index_of_function(sample, cfg).index
        flipped = index_of_function(conjugated, cfg).index
        passed = passed and index is not None and flipped == -index
        details.append('%s: %s vs %s' % (text, index, flipped))
    return passed, '; '.join(details)


def check_index_local_constancy(cfg, plants):
    """
    A perturbation smaller than half the smallest modulus on the circles
    leaves every winding number alone.
    """

    sample = _winding_sample(LOCAL_CONSTANCY_BASE)
    base = index_of_function(sample, cfg)
    epsilon = 0.5 * min(base.min_mods) * LOCAL_CONSTANCY_FRACTION
    nudge = _winding_sample(LOCAL_CONSTANCY_NUDGE)

    def perturbed(s):
        values, statuses = sample(s)
        extra, extra_statuses = nudge(s)
        return values + epsilon * extra, merge_status(statuses, extra_statuses)

    moved = index_of_function(perturbed, cfg)
    passed = base.stabilized and moved.windings == base.windings
    return passed, 'eps=%.3g: %s vs %s' % (
        epsilon, list(base.windings), list(moved.windings))


def check_index_positivity(cfg, plants):
    """
    A positive real part means index 0, found by unwrapping as well as by
    the shortcut.
    """

    details = []
    passed = True
    for text in POSITIVE_CASES:
        unwrapped = index_of_function(_winding_sample(text), cfg, fast_path=False)
        shortcut = index_of_function(_winding_sample(text), cfg)
        passed = passed and unwrapped.holds and shortcut.holds
        details.append('%s -> %s' % (text, unwrapped.index))
    return passed, '; '.join(details)


def _metric_axioms(cfg, P):
    d = {}
    for i in range(3):
        for j in range(3):
            if i <= j or (j, i) == (0, 1):
                d[i, j] = nu_metric(P[i], P[j], cfg).d
    identity = all(d[i, i] <= IDENTITY_TOLERANCE for i in range(3))
    symmetric = abs(d[0, 1] - d[1, 0]) <= SYMMETRY_TOLERANCE
    bounded = all(0.0 <= v <= 1.0 for v in d.values())
    triangle = d[0, 2] <= d[0, 1] + d[1, 2] + TRIANGLE_SLACK
    passed = identity and symmetric and bounded and triangle
    return passed, 'identity %s, symmetry %s, bounds %s, triangle %s' % (
        identity, symmetric, bounded, triangle)


def check_metric_axioms(cfg, plants):
    """
    Identity, symmetry, bounds and the triangle inequality on three
    diffusion plants.
    """

    return _metric_axioms(cfg, [diffusion_factorization(a) for a in (0.3, 0.5, 0.7)])


def check_metric_axioms_delay(cfg, plants):
    """
    The same axioms on three delay plants sharing a delay.
    """

    return _metric_axioms(cfg, [delay_pole_factorization(1, a)
                                for a in DELAY_POLE_TRIPLE])


def check_re_positivity(cfg, plants):
    report = re_positivity_check(*[diffusion_factorization(a) for a in DIFFUSION_PAIR],
                                 cfg=cfg)
    return report.holds, 'min Re g = %.4g at y=%.4g (tolerance %.3g)' % (
        report.min_re, report.argmin, report.tolerance)


def check_boundedness(cfg, plants):
    """
    sup |n_a| and sup |d_a| on the axis stay below a fixed bound.
    """

    grid = axis_grid_from_config(cfg)
    details = []
    passed = True
    for a in _diffusion_params(plants) or [DIFFUSION_PAIR[0]]:
        F = diffusion_factorization(a)
        sups = []
        for which in (0, 1):
            def modulus(y, F=F, which=which):
                sampled = F.sample(1j * np.asarray(y, dtype=float))
                return np.abs(sampled[which]), sampled[2]
            sups.append(sup_with_config(modulus, grid, cfg).value)
        passed = passed and all(v < BOUNDEDNESS_LIMIT for v in sups)
        details.append('a=%g: |n| <= %.4f, |d| <= %.4f' % (a, sups[0], sups[1]))
    return passed, '; '.join(details)


def check_stable_forms(cfg, plants):
    """
    The overflow-free diffusion factors match the plain formulas wherever
    the plain ones can be evaluated.
    """

    s = 1j * make_axis_grid(NAIVE_BAND[0], NAIVE_BAND[1], NAIVE_BAND_POINTS).points
    details = []
    passed = True
    for a in _diffusion_params(plants) or list(DIFFUSION_PAIR):
        agree, worst = stable_and_naive_agree(a, s, rel_tol=NAIVE_REL_TOL)
        passed = passed and agree
        details.append('a=%g: %.2g' % (a, worst))
    return passed, '; '.join(details)


def check_closed_forms(cfg, plants):
    cases = [
        ('delay_pole', delay_pole_factorization(1, 1),
         delay_pole_factorization(1, 1.02), delay_pole_distance(1, 1.02)),
        ('delay_zero', delay_zero_factorization(1, 1, 0),
         delay_zero_factorization(1, 1, 0.02), delay_zero_distance(1, 0.02)),
        ('retarded', retarded_factorization(0),
         retarded_factorization(0.02), retarded_distance(0.02)),
    ]
    details = []
    passed = True
    for name, F1, F2, expected in cases:
        report = nu_metric(F1, F2, cfg)
        error = abs(report.d - expected)
        passed = passed and report.condition_held and error < CLOSED_FORM_TOLERANCE
        details.append('%s: %.5f vs %.5f' % (name, report.d, expected))
    return passed, '; '.join(details)


def check_resolution(cfg, plants):
    """
    Doubling grid density and refinement doesn't move the chordal distance
    of the diffusion pair.
    """

    F1, F2 = [diffusion_factorization(a) for a in DIFFUSION_PAIR]
    coarse = kappa_distance(F1, F2, cfg).value
    fine = kappa_distance(F1, F2, cfg.doubled()).value
    return abs(coarse - fine) < RESOLUTION_TOLERANCE, '%.9f vs %.9f' % (coarse, fine)


CHECKS = OrderedDict([
    ('diffusion-pair', check_diffusion_pair),
    ('margins', check_margins),
    ('asymptotics', check_asymptotics),
    ('continuity', check_continuity),
    ('index-axioms', check_index_axioms),
    ('index-conjugation', check_index_conjugation),
    ('index-local-constancy', check_index_local_constancy),
    ('index-positivity', check_index_positivity),
    ('metric-axioms', check_metric_axioms),
    ('metric-axioms-delay', check_metric_axioms_delay),
    ('re-positivity', check_re_positivity),
    ('boundedness', check_boundedness),
    ('stable-forms', check_stable_forms),
    ('closed-forms', check_closed_forms),
    ('resolution-stability', check_resolution),
])


def run_checks(cfg, plants, names=None):
    """
    :param NumericConfig cfg: Resolution and tolerances.
    :param list plants: Factorizations the per-plant checks run on.
    :param list names: Subset of :py:data:`CHECKS` to run, default all.
    :rtype: list
    :returns: :py:class:`CheckResult` per check, in order.
    """

    results = []
    for name in names or list(CHECKS):
        try:
            passed, detail = CHECKS[name](cfg, plants)
        except NuGapException as e:
            passed, detail = False, '%s: %s' % (type(e).__name__, e.message)
        logger.info('verify %s: %s (%s)' % (name, 'pass' if passed else 'FAIL', detail))
        results.append(CheckResult(name, bool(passed), detail))
    return results
