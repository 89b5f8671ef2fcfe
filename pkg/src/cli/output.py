"""
JSON and CSV writers. Output is deterministic: keys are sorted and floats
are written as the shortest decimal that round-trips.
"""

import csv
import io
import json

import numpy as np

from src.utils.general import format_float, json_float


def _clean(data):
    if isinstance(data, np.generic):
        data = data.item()
    if isinstance(data, dict):
        return {str(k): _clean(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_clean(v) for v in data]
    if isinstance(data, float):
        return json_float(data)
    return data


def render_json(data):
    """
    :param dict data: Report data. nan and inf are written as null.
    :rtype: str
    """

    return json.dumps(_clean(data), indent=2, sort_keys=True, allow_nan=False) + '\n'


def render_csv(header, rows):
    """
    :param tuple header: Column names.
    :param rows: Iterable of row tuples. Floats are formatted with
        :py:func:`format_float`, anything else goes through ``str``.
    :rtype: str
    """

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v
                         for v in row])
    return buf.getvalue()


def render_sweep_csv(sweep):
    """
    :param sweep: ``(y, kappa)`` rows.
    :rtype: str
    """

    return render_csv(('y', 'kappa'),
                      ((float(y), float(k)) for y, k in sweep))
