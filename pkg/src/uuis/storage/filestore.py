"""Durable single-file backend.

Same behavior as the in-memory store, plus persistence: after every
committed batch the whole state is serialized to JSON and moved into place
with an atomic rename, so a crash mid-write leaves either the old file or
the new one, never a torn mix.  A lock file guards against two processes
opening the same store for writing.
"""
from __future__ import annotations

import fcntl
import json
import os

from ..errors import Conflict, ParseError
from .gateway import MemoryStore


class FileStore(MemoryStore):
    def __init__(self, path: str):
        super().__init__()
        self.path = path
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        self._lock_path = path + ".lock"
        self._lock_file = open(self._lock_path, "a+")
        try:
            fcntl.flock(self._lock_file, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except OSError:
            self._lock_file.close()
            raise Conflict(f"store {path} is already open for writing")
        if os.path.exists(path):
            try:
                with open(path, encoding="utf-8") as fh:
                    state = json.load(fh)
            except (OSError, ValueError) as exc:
                raise ParseError(f"cannot read store file {path}: {exc}")
            self.restore(state)

    def close(self) -> None:
        if self._lock_file.closed:
            return
        fcntl.flock(self._lock_file, fcntl.LOCK_UN)
        self._lock_file.close()

    def _after_commit(self) -> None:
        self._save()

    def restore(self, state) -> None:
        super().restore(state)
        self._save()

    def _save(self) -> None:
        tmp = self.path + ".tmp"
        payload = json.dumps(self.dump(), sort_keys=True)
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(payload)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, self.path)
