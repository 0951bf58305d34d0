"""JSON-lines result cache keyed by datum string, mode and code version."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

from . import __version__

# Bump whenever counting code changes observable results.
ALGORITHM_VERSION = 1
VERSION_TAG = f"{__version__}+alg{ALGORITHM_VERSION}"
ENV_VAR = "HURWITZ_CACHE"


class ResultCache:
    def __init__(self, path: os.PathLike | str, version: str = VERSION_TAG):
        self.path = Path(path)
        self.version = version
        self._entries: dict[tuple[str, str], dict] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        obj = json.loads(line)
                    except json.JSONDecodeError:
                        continue
                    if obj.get("version") != self.version:
                        continue
                    self._entries[obj["key"], obj["mode"]] = obj["result"]

    def get(self, key: str, mode: str) -> Optional[dict]:
        return self._entries.get((key, mode))

    def put(self, key: str, mode: str, result: dict) -> None:
        if (key, mode) in self._entries:
            return
        self._entries[key, mode] = result
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({"key": key, "mode": mode, "version": self.version,
                                 "result": result}) + "\n")

    def __len__(self) -> int:
        return len(self._entries)


def open_cache(path: Optional[str]) -> Optional[ResultCache]:
    path = path or os.environ.get(ENV_VAR)
    return ResultCache(path) if path else None
