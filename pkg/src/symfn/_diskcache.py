"""Optional on-disk persistence for per-degree transition matrices.

Activated by the SYMFN_CACHE_DIR environment variable; absence means
in-memory caching only.  Files are versioned JSON and best-effort: any read
or write problem silently falls back to recomputation.
"""

from __future__ import annotations

import json
import os

VERSION = 1


def _cache_dir() -> str | None:
    return os.environ.get("SYMFN_CACHE_DIR") or None


def _path(kind: str, key: str, n: int) -> str | None:
    d = _cache_dir()
    if not d:
        return None
    return os.path.join(d, f"{kind}-{key}-{n}.v{VERSION}.json")


def load(kind: str, key: str, n: int):
    path = _path(kind, key, n)
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, ValueError):
        return None
    if payload.get("version") != VERSION or payload.get("kind") != kind:
        return None
    return payload.get("data")


def store(kind: str, key: str, n: int, data) -> None:
    path = _path(kind, key, n)
    if path is None:
        return
    payload = {"version": VERSION, "kind": kind, "key": key, "n": n, "data": data}
    tmp = f"{path}.tmp.{os.getpid()}"
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass
