"""
General helper functions that don't fit neatly under any given category.
Mostly number formatting for the JSON and CSV writers.
"""

import math


def format_float(value):
    """
    Shortest decimal string that round-trips to ``value``. Python's repr
    already guarantees this and never exceeds 17 significant digits.

    :param float value: The number to format.
    :rtype: str
    """

    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return repr(value)


def json_float(value):
    """
    JSON has no spelling for nan/inf, so those turn into ``None``.

    :rtype: float or None
    """

    if value is None:
        return None
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return None
    return value


def json_floats(values):
    """
    :param values: Iterable of numbers.
    :rtype: list
    """

    return [json_float(v) for v in values]
