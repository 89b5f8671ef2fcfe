"""
Chunked evaluation of vectorized functions over sample arrays. Chunks may
run on worker threads (numpy releases the GIL in its ufunc loops); results
are stitched back in input order, so the outcome never depends on the
thread count.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from src.expr.outcome import EvalStatus


def normalize_result(result, size):
    """
    Functions handed to the samplers either return a values array, with
    non-finite entries marking failures, or a ``(values, statuses)`` pair.

    :rtype: tuple
    :returns: ``(values, statuses)``
    """

    if isinstance(result, tuple):
        values, statuses = result
        values = np.asarray(values)
        statuses = np.asarray(statuses, dtype=np.int8)
    else:
        values = np.asarray(result)
        statuses = np.where(np.isfinite(values), EvalStatus.OK,
                            EvalStatus.INVALID).astype(np.int8)
    if values.shape != (size,):
        values = np.broadcast_to(values, (size,)).copy()
        statuses = np.broadcast_to(statuses, (size,)).copy()
    return values, statuses


def sample(func, points, threads=1, chunk_size=2048):
    """
    Evaluates ``func`` over ``points``.

    :param func: Vectorized callable, see :py:func:`normalize_result`.
    :param numpy.ndarray points: Sample points.
    :param int threads: Worker threads. 1 evaluates inline.
    :param int chunk_size: Points per work item.
    :rtype: tuple
    :returns: ``(values, statuses)`` in the order of ``points``.
    """

    points = np.asarray(points)
    size = len(points)
    if threads <= 1 or size <= chunk_size:
        return normalize_result(func(points), size)

    chunks = [points[i:i + chunk_size] for i in range(0, size, chunk_size)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(
            lambda chunk: normalize_result(func(chunk), len(chunk)), chunks))
    values = np.concatenate([r[0] for r in results])
    statuses = np.concatenate([r[1] for r in results])
    return values, statuses
