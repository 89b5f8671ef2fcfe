"""
Winding number and index related exceptions.
"""

from src.utils.exceptions import NuGapException


class ZeroNearContour(NuGapException):
    """
    Raised when the function gets too close to zero on a circle for its
    winding number to mean anything.

    :attr float radius: The circle.
    :attr float min_mod: Smallest modulus seen.
    :attr float max_mod: Largest modulus seen.
    """

    def __init__(self, message, radius, min_mod, max_mod):
        NuGapException.__init__(self, message)
        self.radius = radius
        self.min_mod = min_mod
        self.max_mod = max_mod


class PhaseRefinementExhausted(NuGapException):
    """
    Raised when angular bisection hits its depth limit with phase steps
    still too large to unwrap reliably.
    """

    pass
