"""
Assorted utilities for unit testing.
"""

import numpy as np
from twisted.trial import unittest

from src.utils.config import NumericConfig


def fast_config(**overrides):
    """
    A reduced-resolution config. Good enough for every closed form we check
    against, and quick enough to run the whole suite in a few seconds.

    :rtype: NumericConfig
    """

    base = dict(grid_n=1024, refine_iters=40, circle_n=2048, threads=1)
    base.update(overrides)
    return NumericConfig.from_settings(**base)


#noinspection PyPep8Naming
class NuGapTestCase(unittest.TestCase):
    """
    Some helpers for unit testing.
    """

    def setUp(self):
        """
        By default, hand every test a reduced-resolution config.

        .. note:: If you override this, call super() first.
        """

        self.cfg = fast_config()

    def assertClose(self, first, second, rel=1e-9, abs_tol=0.0, msg=None):
        """
        Fails unless ``first`` and ``second`` agree to the given tolerances.
        Works for scalars and arrays, complex included.
        """

        first = np.asarray(first)
        second = np.asarray(second)
        if not np.allclose(first, second, rtol=rel, atol=abs_tol, equal_nan=False):
            self.fail(msg or '%r != %r within rel=%g abs=%g' % (
                first, second, rel, abs_tol))

    def assertStatus(self, statuses, expected, msg=None):
        """
        Fails unless every entry of a status array equals ``expected``.
        """

        statuses = np.asarray(statuses)
        if not np.all(statuses == expected):
            self.fail(msg or 'statuses %r, expected all %r' % (
                statuses, expected))
