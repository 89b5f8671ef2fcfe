"""
Numeric configuration. Values come from :py:mod:`settings` and may be
overridden per invocation (command line flags, tests).
"""

import os
from dataclasses import dataclass, fields, replace

import settings
from src.utils.exceptions import ConfigurationError


# Dotted config keys, as used on the command line and in reports, mapped
# to NumericConfig attributes.
DOTTED_KEYS = {
    'grid.ymin': 'grid_ymin',
    'grid.ymax': 'grid_ymax',
    'grid.n': 'grid_n',
    'grid.refine_iters': 'refine_iters',
    'grid.refine_candidates': 'refine_candidates',
    'circle.radii': 'circle_radii',
    'circle.n': 'circle_n',
}


def get_thread_count(requested=None):
    """
    Resolves the worker thread count. 0 (or nothing) means one per CPU.

    :param int requested: Explicit request, overrides settings.
    :rtype: int
    """

    if requested is None:
        requested = settings.THREADS
    if requested < 0:
        raise ConfigurationError('Thread count must be >= 0, got %s' % requested)
    if requested == 0:
        return os.cpu_count() or 1
    return requested


@dataclass(frozen=True)
class NumericConfig(object):
    """
    Everything the numeric modules need to know about resolution and
    tolerances. Immutable, so one instance can be shared by threads.
    """

    grid_ymin: float
    grid_ymax: float
    grid_n: int
    refine_iters: int
    refine_candidates: int
    circle_radii: tuple
    circle_n: int
    phase_step_cap: float
    max_bisection_depth: int
    invertibility_abs_tol: float
    invertibility_rel_tol: float
    failure_fraction_limit: float
    loop_entry_sup_limit: float
    loop_failure_fraction: float
    threads: int
    chunk_size: int

    @classmethod
    def from_settings(cls, **overrides):
        """
        Builds a config from :py:mod:`settings`, then applies ``overrides``.

        :rtype: NumericConfig
        """

        cfg = cls(
            grid_ymin=float(settings.GRID_YMIN),
            grid_ymax=float(settings.GRID_YMAX),
            grid_n=int(settings.GRID_N),
            refine_iters=int(settings.GRID_REFINE_ITERS),
            refine_candidates=int(settings.GRID_REFINE_CANDIDATES),
            circle_radii=tuple(float(r) for r in settings.CIRCLE_RADII),
            circle_n=int(settings.CIRCLE_N),
            phase_step_cap=float(settings.WINDING_PHASE_STEP_CAP),
            max_bisection_depth=int(settings.WINDING_MAX_BISECTION_DEPTH),
            invertibility_abs_tol=float(settings.INVERTIBILITY_ABS_TOL),
            invertibility_rel_tol=float(settings.INVERTIBILITY_REL_TOL),
            failure_fraction_limit=float(settings.FAILURE_FRACTION_LIMIT),
            loop_entry_sup_limit=float(settings.LOOP_ENTRY_SUP_LIMIT),
            loop_failure_fraction=float(settings.LOOP_FAILURE_FRACTION),
            threads=get_thread_count(),
            chunk_size=int(settings.SAMPLE_CHUNK_SIZE),
        )
        return cfg.with_overrides(**overrides)

    def with_overrides(self, **overrides):
        """
        Returns a copy with the given attributes (or dotted keys, passed
        through a dict) replaced. Values are checked before returning.

        :rtype: NumericConfig
        :raises: :py:exc:`ConfigurationError` on unknown keys or bad values.
        """

        names = set(f.name for f in fields(self))
        clean = {}
        for key, value in overrides.items():
            key = DOTTED_KEYS.get(key, key)
            if key not in names:
                raise ConfigurationError('Unknown config key: %s' % key)
            if value is None:
                continue
            if key == 'circle_radii':
                value = tuple(float(r) for r in value)
            clean[key] = value

        cfg = replace(self, **clean)
        cfg.validate()
        return cfg

    def doubled(self):
        """
        Same config with twice the grid density and refinement rounds. The
        axis grid goes from n to 2n - 1 points per sign, which halves every
        step and keeps the old points. Used by resolution stability checks.

        :rtype: NumericConfig
        """

        return replace(self, grid_n=2 * self.grid_n - 1,
                       refine_iters=self.refine_iters * 2)

    def validate(self):
        """
        Range checks that don't belong to a specific grid. Grid range
        checks live in :py:mod:`src.boundary.grids`, since a degraded grid
        is something the verify command reports on rather than rejects.

        :raises: :py:exc:`ConfigurationError`
        """

        if self.refine_iters < 0:
            raise ConfigurationError('grid.refine_iters must be >= 0')
        if self.refine_candidates < 1:
            raise ConfigurationError('grid.refine_candidates must be >= 1')
        if not self.circle_radii:
            raise ConfigurationError('circle.radii must not be empty')
        for radius in self.circle_radii:
            if not 0.0 < radius < 1.0:
                raise ConfigurationError(
                    'circle.radii entries must lie in (0, 1), got %s' % radius)
        if list(self.circle_radii) != sorted(self.circle_radii):
            raise ConfigurationError('circle.radii must be increasing')
        if self.threads < 1:
            raise ConfigurationError('threads must be >= 1')
        if self.chunk_size < 1:
            raise ConfigurationError('chunk size must be >= 1')
        if not 0.0 <= self.failure_fraction_limit <= 1.0:
            raise ConfigurationError('failure fraction limit must be in [0, 1]')

    def as_dict(self):
        """
        Dotted-key view, as reported in JSON output.

        :rtype: dict
        """

        out = {}
        for dotted, attr in sorted(DOTTED_KEYS.items()):
            value = getattr(self, attr)
            out[dotted] = list(value) if isinstance(value, tuple) else value
        return out

    def invertibility_tolerance(self, max_mod):
        """
        :param float max_mod: Largest modulus seen on the contour.
        :rtype: float
        """

        return max(self.invertibility_abs_tol,
                   self.invertibility_rel_tol * max_mod)
