#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Cooperative enumeration worker.

The search space is split into chunks that run on a thread pool. Every chunk
reports explored candidates through ``tick``; the worker stops all chunks
once the time budget is spent or ``stop`` is called.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from solvers.limits import SolveLimits
from utils.log import get_logger

logger = get_logger(__name__)

Chunk = TypeVar('Chunk')
Result = TypeVar('Result')

# candidates between two checks of the clock
TICK_BATCH = 256


class EnumerationWorker:
    """
    Runs enumeration chunks and tracks their progress.

    Args:
        limits: time budget and worker count
        progress: optional callback receiving (finished chunks, total chunks)
    """

    def __init__(self, limits: SolveLimits, progress: Optional[Callable[[int, int], None]] = None):
        self.limits = limits
        self.progress = progress
        self.explored = 0
        self._is_running = True
        self._timed_out = False
        self._lock = threading.Lock()
        self._deadline = None
        if limits.time_budget is not None:
            self._deadline = time.monotonic() + limits.time_budget

    def stop(self):
        """Stop every running chunk at its next tick."""
        self._is_running = False

    @property
    def running(self) -> bool:
        return self._is_running

    @property
    def timed_out(self) -> bool:
        return self._timed_out

    def tick(self, count: int = 1) -> bool:
        """
        Record explored candidates.

        Returns:
            bool: False once enumeration must stop
        """
        with self._lock:
            self.explored += count
        if self._deadline is not None and time.monotonic() > self._deadline:
            if self._is_running:
                logger.info(f"Time budget of {self.limits.time_budget}s spent after {self.explored} candidates")
            self._timed_out = True
            self._is_running = False
        return self._is_running

    def run(self, chunks: Sequence[Chunk], task: Callable[[Chunk, 'EnumerationWorker'], Result]) -> List[Result]:
        """
        Run ``task`` on every chunk.

        Returns:
            list: the results in chunk order, whatever order they finished in
        """
        total = len(chunks)
        results: List[Optional[Result]] = [None] * total
        finished = 0

        def done(index: int, result: Result):
            nonlocal finished
            results[index] = result
            finished += 1
            logger.debug(f"Chunk {index + 1}/{total} finished, {self.explored} candidates so far")
            if self.progress is not None:
                self.progress(finished, total)

        if self.limits.workers <= 1 or total <= 1:
            for index, chunk in enumerate(chunks):
                if not self._is_running:
                    break
                done(index, task(chunk, self))
            return [r for r in results if r is not None]

        with ThreadPoolExecutor(max_workers=self.limits.workers) as pool:
            futures = [pool.submit(task, chunk, self) for chunk in chunks]
            for index, future in enumerate(futures):
                done(index, future.result())
        return [r for r in results if r is not None]
