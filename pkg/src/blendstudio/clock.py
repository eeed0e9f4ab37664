"""Clock abstraction so offline runs produce byte-stable timestamps."""

from __future__ import annotations

import threading
from datetime import datetime, timedelta, timezone
from typing import Protocol


class Clock(Protocol):
    def now_iso(self) -> str: ...


class SystemClock:
    def now_iso(self) -> str:
        return datetime.now(timezone.utc).isoformat(timespec="seconds")


class CounterClock:
    """Deterministic clock: a fixed epoch advanced one second per call."""

    def __init__(self, epoch: str = "2020-01-01T00:00:00+00:00") -> None:
        self._start = datetime.fromisoformat(epoch)
        self._ticks = 0
        self._lock = threading.Lock()

    def now_iso(self) -> str:
        with self._lock:
            stamp = self._start + timedelta(seconds=self._ticks)
            self._ticks += 1
        return stamp.isoformat(timespec="seconds")
