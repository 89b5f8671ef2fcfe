"""
Plant related exceptions.
"""

from src.utils.exceptions import NuGapException


class ParameterRangeError(NuGapException):
    """
    Raised when a plant family gets parameters outside its allowed range.
    """

    pass


class PlantSpecError(NuGapException):
    """
    Raised when a textual plant spec (``diffusion:a=0.5`` and friends)
    can't be understood.
    """

    pass


class FactorizationError(NuGapException):
    """
    Raised when a factor pair fails its sanity probes: d vanishes on every
    probe point, or n/d disagrees with the plant.
    """

    pass


class MobiusPoleError(NuGapException):
    """
    Raised when mapping the excluded point (z = 1, or s = -1).
    """

    pass
