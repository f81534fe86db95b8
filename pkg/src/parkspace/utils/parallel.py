"""
Thread-pool helper for the residue scans and brute-force sweeps.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config import get_config

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int] = None) -> int:
    """Explicit value, else the configured ``compute.threads``."""
    if threads is None:
        threads = get_config().compute.threads
    return max(1, int(threads))


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Order-preserving map; runs inline when a single thread is requested."""
    workers = resolve_threads(threads)
    values = list(items)
    if workers == 1 or len(values) < 2:
        return [func(item) for item in values]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, values))
