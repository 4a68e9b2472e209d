"""Optional process-level parallelism, capped by the MV_THREADS variable."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MV_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items) -> list:
    """``list(map(fn, items))``, spread over MV_THREADS processes.

    Output order always follows ``items``, so results do not depend on the
    worker count.  ``fn`` must be a module-level function.
    """
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
