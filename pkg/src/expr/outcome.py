"""
Evaluation results. Vectorized code passes around a status array of
:py:class:`EvalStatus` codes alongside the values; scalar callers get an
:py:class:`EvalOutcome`.
"""

from dataclasses import dataclass
from enum import IntEnum

import numpy as np


class EvalStatus(IntEnum):
    OK = 0
    POLE_HIT = 1
    BRANCH_CUT_HIT = 2
    OVERFLOW = 3
    INVALID = 4
    # Both factors vanish at the point. Only produced by the chordal density.
    NOT_COPRIME = 5

    @property
    def reason(self):
        return self.name.lower().replace('_', '-')


@dataclass(frozen=True)
class EvalOutcome(object):
    """
    Exactly one of ``value`` and ``failure`` is set.

    :attr complex value: The computed value, or ``None``.
    :attr EvalStatus failure: Why evaluation failed, or ``None``.
    """

    value: complex = None
    failure: EvalStatus = None

    def __post_init__(self):
        if (self.value is None) == (self.failure is None):
            raise ValueError('EvalOutcome needs exactly one of value/failure')

    @property
    def ok(self):
        return self.failure is None

    @classmethod
    def from_arrays(cls, values, statuses):
        """
        Builds an outcome from one-element value/status arrays.

        :rtype: EvalOutcome
        """

        status = EvalStatus(int(np.asarray(statuses).ravel()[0]))
        if status != EvalStatus.OK:
            return cls(failure=status)
        return cls(value=complex(np.asarray(values).ravel()[0]))

    def conjugate(self):
        if not self.ok:
            return self
        return EvalOutcome(value=self.value.conjugate())


def merge_status(first, second):
    """
    Combines two status arrays. The first failure wins.

    :rtype: numpy.ndarray
    """

    return np.where(first != EvalStatus.OK, first, second)


def count_failures(statuses):
    """
    :param statuses: Status array.
    :rtype: dict
    :returns: Reason string -> count, for every failure reason present.
    """

    counts = {}
    codes, totals = np.unique(np.asarray(statuses), return_counts=True)
    for code, total in zip(codes, totals):
        if code != EvalStatus.OK:
            counts[EvalStatus(int(code)).reason] = int(total)
    return counts
