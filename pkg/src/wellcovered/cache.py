"""Append-only JSON-lines cache of classification records.

Each line is ``<sha256 prefix> <json>``; a line whose checksum does not match
is discarded with a warning.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

from .classify import ClassificationRecord

log = logging.getLogger(__name__)

ENV_VAR = "WELLCOVERED_CACHE_DIR"
FILENAME = "census.jsonl"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "wellcovered"


def _checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def cache_key(n: int, S, field: int) -> tuple:
    return n, tuple(S), field


class CensusCache:
    def __init__(self, path: Path | str | None = None):
        path = Path(path) if path is not None else default_dir()
        self.path = path / FILENAME if path.suffix != ".jsonl" else path
        self.entries: dict[tuple, ClassificationRecord] = {}
        self.discarded = 0
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line:
                    continue
                digest, _, payload = line.partition(" ")
                try:
                    if _checksum(payload) != digest:
                        raise ValueError("checksum mismatch")
                    rec = ClassificationRecord.from_dict(json.loads(payload))
                except (ValueError, KeyError, TypeError) as exc:
                    self.discarded += 1
                    log.warning("cache %s line %d discarded: %s", self.path, lineno, exc)
                    continue
                self.entries[cache_key(rec.spec.n, rec.spec.S, rec.field)] = rec

    def get(self, n: int, S, field: int) -> ClassificationRecord | None:
        return self.entries.get(cache_key(n, S, field))

    def put(self, rec: ClassificationRecord) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(rec.to_dict(), sort_keys=True, separators=(",", ":"))
        with self.path.open("a") as fh:
            fh.write(f"{_checksum(payload)} {payload}\n")
            fh.flush()
        self.entries[cache_key(rec.spec.n, rec.spec.S, rec.field)] = rec

    def __len__(self) -> int:
        return len(self.entries)
