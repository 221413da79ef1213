"""Run monitoring: per-check wall time, resident memory, and summary tables."""

import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional

import pandas as pd
import psutil

logger = logging.getLogger(__name__)


class RunMonitor:
    """Tracks elapsed time and peak RSS of named steps.

    Disabled monitors record nothing, so reports built without timings stay
    identical between runs.
    """

    def __init__(self, enabled: bool = False):
        self.enabled = enabled
        self.elapsed: Dict[str, float] = {}
        self.peak_rss = 0
        self._process = psutil.Process() if enabled else None
        self.start_time = time.perf_counter()

    def _sample_rss(self) -> None:
        rss = self._process.memory_info().rss
        self.peak_rss = max(self.peak_rss, rss)

    @contextmanager
    def track(self, name: str) -> Iterator[None]:
        if not self.enabled:
            yield
            return
        started = time.perf_counter()
        try:
            yield
        finally:
            self.elapsed[name] = round(time.perf_counter() - started, 6)
            self._sample_rss()
            logger.debug(f"{name}: {self.elapsed[name]:.3f}s")

    def elapsed_for(self, name: str) -> Optional[float]:
        return self.elapsed.get(name)

    def get_summary(self) -> Dict[str, object]:
        """Totals for the run; empty when disabled."""
        if not self.enabled:
            return {}
        self._sample_rss()
        return {
            "total_seconds": round(time.perf_counter() - self.start_time, 6),
            "peak_rss_mb": round(self.peak_rss / (1024 * 1024), 2),
            "tracked_steps": len(self.elapsed),
        }


def summary_table(rows: List[Dict[str, object]], columns: Optional[List[str]] = None) -> pd.DataFrame:
    """One row per record, in the given column order."""
    frame = pd.DataFrame(rows)
    if columns is not None:
        frame = frame.reindex(columns=columns)
    return frame


def render_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(no rows)"
    return frame.to_string(index=False)
