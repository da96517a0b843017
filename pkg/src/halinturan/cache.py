"""On-disk cache of extremal records, one JSON file per ``(n, k)``.

Files live in ``$HALIN_CACHE_DIR`` (default ``./.halin-cache``) and are
named ``ex-n{n}-k{k}-v{FORMAT_VERSION}.json``; a format bump orphans old
files.  Every field except ``timestamp`` is a deterministic function of
``(n, k)``.
"""

from __future__ import annotations

import json
import os
import time
from pathlib import Path
from typing import Callable

from . import __version__
from .enumeration import ExtremalRecord

FORMAT_VERSION = 1
ENV_VAR = "HALIN_CACHE_DIR"


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    return Path(override or os.environ.get(ENV_VAR) or ".halin-cache")


def record_path(directory: Path, n: int, k: int) -> Path:
    return directory / f"ex-n{n}-k{k}-v{FORMAT_VERSION}.json"


def record_payload(rec: ExtremalRecord) -> dict:
    d = rec.to_dict()
    d["tool_version"] = __version__
    d["format_version"] = FORMAT_VERSION
    return d


def dumps_record(rec: ExtremalRecord, timestamp: float | None = None) -> str:
    d = record_payload(rec)
    d["timestamp"] = time.time() if timestamp is None else timestamp
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


def load_record(path: Path) -> ExtremalRecord | None:
    try:
        d = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if d.get("format_version") != FORMAT_VERSION:
        return None
    return ExtremalRecord.from_dict(d)


def cached_extremal(
    n: int,
    k: int,
    compute: Callable[[], ExtremalRecord],
    directory: str | os.PathLike | None = None,
) -> tuple[ExtremalRecord, bool]:
    """Load ``(n, k)`` from the cache or compute and store it.

    Returns the record and whether it came from the cache.
    """
    d = cache_dir(directory)
    path = record_path(d, n, k)
    rec = load_record(path) if path.exists() else None
    if rec is not None and (rec.n, rec.k) == (n, k):
        return rec, True
    rec = compute()
    d.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps_record(rec))
    tmp.replace(path)
    return rec, False
