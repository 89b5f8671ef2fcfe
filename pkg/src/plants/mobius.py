"""
Moebius maps between the unit disc and the right half-plane::

    s = (1+z)/(1-z)    z = (s-1)/(s+1)

The unit circle goes to the imaginary axis, with z = 1 going to infinity.
"""

import numpy as np

import settings
from src.plants.exceptions import MobiusPoleError


def mobius_to_halfplane(z):
    """
    :param complex z: Point in the closed disc, not 1.
    :rtype: complex
    :raises: :py:exc:`MobiusPoleError` at z = 1.
    """

    z = complex(z)
    if abs(1 - z) < settings.POLE_TOLERANCE:
        raise MobiusPoleError('z = 1 has no image in the half-plane')
    return (1 + z) / (1 - z)


def mobius_to_disc(s):
    """
    :param complex s: Point in the closed half-plane.
    :rtype: complex
    :raises: :py:exc:`MobiusPoleError` at s = -1.
    """

    s = complex(s)
    if abs(s + 1) < settings.POLE_TOLERANCE:
        raise MobiusPoleError('s = -1 has no image in the disc')
    return (s - 1) / (s + 1)


def disc_to_halfplane(z):
    """
    Array version of :py:func:`mobius_to_halfplane` for contour sampling.
    Callers keep z away from 1 (circles of radius < 1).

    :rtype: numpy.ndarray
    """

    z = np.asarray(z, dtype=complex)
    return (1 + z) / (1 - z)


def compose_on_disc(func):
    """
    Turns a half-plane function of s, returning ``(values, statuses)``, into
    the same kind of function of the disc variable z.
    """

    def on_disc(z):
        return func(disc_to_halfplane(z))
    return on_disc
