"""Chunked sweeps over [1, N].

A sweep partitions the range into fixed-size chunks, hands each chunk to a
worker function and returns the per-chunk results in chunk order. Results
never depend on the chunk size or worker count as long as the caller's
merge is associative.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, TypeVar

from halt.types import Predicate, require_positive

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class SweepConfig:
    """Immutable sweep settings.

    Attributes:
        chunk_size: Number of consecutive integers handed to one task.
        workers: ThreadPoolExecutor max workers; 1 runs inline.
    """

    chunk_size: int = 4096
    workers: int = 1

    def __post_init__(self) -> None:
        require_positive("chunk_size", self.chunk_size)
        require_positive("workers", self.workers)


DEFAULT_SWEEP = SweepConfig()


def chunk_ranges(n: int, chunk_size: int) -> list[range]:
    """Split [1, n] into consecutive ranges of at most ``chunk_size``."""
    return [range(lo, min(lo + chunk_size, n + 1)) for lo in range(1, n + 1, chunk_size)]


def map_chunks(
    fn: Callable[[range], T], n: int, config: SweepConfig = DEFAULT_SWEEP,
) -> list[T]:
    chunks = chunk_ranges(n, config.chunk_size)
    logger.debug("sweeping [1, %d] in %d chunks on %d workers", n, len(chunks), config.workers)
    if config.workers == 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        return list(executor.map(fn, chunks))


def count_where(pred: Predicate, n: int, config: SweepConfig = DEFAULT_SWEEP) -> int:
    """Return ``#{1 <= x <= n : pred(x)}``."""

    def _count(chunk: range) -> int:
        return sum(1 for x in chunk if pred(x))

    return sum(map_chunks(_count, n, config))
