"""On-disk cache of exact census counts.

One JSON object per line with the keys ``kind, n, m, k, delta, count, method,
timestamp`` in that order. ``count`` is a decimal string so arbitrarily large
integers survive the round trip; absent parameters are ``null``. Records are
append-only and never rewritten.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterator

__all__ = ["CENSUS_KINDS", "CensusTable", "CensusCache", "CacheMismatchError", "default_cache_path"]

CENSUS_KINDS = ("queues_by_n", "queues_by_n_m", "kqueues_by_n_m_k", "labelled_qn_le", "labelled_regular")
_FIELDS = ("kind", "n", "m", "k", "delta", "count", "method", "timestamp")


class CacheMismatchError(RuntimeError):
    pass


def default_cache_path() -> Path:
    return Path(os.environ.get("QUEUELAB_CACHE", "census.cache"))


@dataclass(frozen=True)
class CensusTable:
    kind: str
    n: int
    count: int
    method: str
    m: int | None = None
    k: int | None = None
    delta: int | None = None
    timestamp: str = ""

    def __post_init__(self):
        if self.kind not in CENSUS_KINDS:
            raise ValueError(f"unknown census kind {self.kind!r}")
        if not isinstance(self.count, int) or self.count < 0:
            raise ValueError("count must be a non-negative integer")

    @property
    def key(self) -> tuple:
        return (self.kind, self.n, self.m, self.k, self.delta)

    def to_line(self) -> str:
        rec = {f: getattr(self, f) for f in _FIELDS}
        rec["count"] = str(self.count)
        return json.dumps(rec, separators=(",", ":"))

    @classmethod
    def from_line(cls, line: str) -> "CensusTable":
        rec = json.loads(line)
        rec["count"] = int(rec["count"])
        return cls(**{f: rec.get(f) for f in _FIELDS})


class CensusCache:
    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else default_cache_path()
        self._lock = threading.Lock()
        self._records: dict[tuple, CensusTable] = {}
        if self.path.exists():
            for rec in self._read():
                self._records.setdefault(rec.key, rec)

    def _read(self) -> Iterator[CensusTable]:
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    yield CensusTable.from_line(line)

    def get(self, kind: str, n: int, m=None, k=None, delta=None) -> CensusTable | None:
        return self._records.get((kind, n, m, k, delta))

    def put(self, record: CensusTable) -> CensusTable:
        """Append ``record``; an existing entry with the same key must agree on the count."""
        with self._lock:
            old = self._records.get(record.key)
            if old is not None:
                if old.count != record.count:
                    raise CacheMismatchError(f"{record.key}: cached {old.count}, recomputed {record.count}")
                return old
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8", newline="\n") as fh:
                fh.write(record.to_line() + "\n")
            self._records[record.key] = record
            return record

    def count(self, kind: str, n: int, compute: Callable[[], int], method: str,
              m=None, k=None, delta=None, verify: bool = False) -> int:
        """Cached count, computing and storing it when missing.

        With ``verify`` the count is recomputed even on a hit and must match.
        """
        hit = self.get(kind, n, m, k, delta)
        if hit is not None and not verify:
            return hit.count
        value = compute()
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        return self.put(CensusTable(kind, n, value, method, m, k, delta, stamp)).count

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[CensusTable]:
        return iter(self._records.values())
