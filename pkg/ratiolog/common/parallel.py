"""Run independent checks concurrently while keeping results in submission order."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable
from typing import Sequence
from typing import TypeVar

from ratiolog.common import config_utils

logger = logging.getLogger(__name__)

Result = TypeVar("Result")


def run_ordered(tasks: Sequence[Callable[[], Result]], workers: int | None = None) -> list[Result]:
    """Run zero argument callables and return their results in the order given.

    Args:
        tasks: Independent callables.
        workers: Thread count, defaults to RATIOLOG_WORKERS. One worker runs inline.

    Returns:
        Results aligned with tasks.
    """
    workers = config_utils.WORKERS if workers is None else max(1, workers)
    if workers == 1 or len(tasks) < 2:
        return [task() for task in tasks]
    logger.debug(f"Running {len(tasks)} checks on {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(task) for task in tasks]
        return [future.result() for future in futures]
