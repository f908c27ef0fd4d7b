"""Order-preserving parallel map over a shared read-only context."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

_CONTEXT = None


def _init(context):
    global _CONTEXT
    _CONTEXT = context


def _call(args):
    func, item = args
    return func(_CONTEXT, item)


def parallel_map(func, items, jobs: int = 1, context=None) -> list:
    """``[func(context, item) for item in items]``, optionally in ``jobs`` processes.

    Results come back in input order whatever the number of workers, so
    output is identical for every ``jobs`` value.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(context, item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init,
                             initargs=(context,)) as pool:
        return list(pool.map(_call, [(func, item) for item in items]))
