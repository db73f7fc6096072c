"""On-disk cache for ``enumerate_by_invariants``.

One JSON file per ``(k, square, c1)``.  A header records the query and the
tool version; a file whose header does not match is ignored and rewritten.
Writes go through a temporary file and ``os.replace`` so readers never see
a partial file.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from . import __version__
from .enumeration import EnumQuery, enumerate_by_invariants
from .lattice import HomologyClass, std_chart

ENV_VAR = "PINWHEEL_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "pinwheel-lattice"


def _header(q: EnumQuery) -> dict:
    return {"chart": std_chart(q.k).name, "square": q.square, "c1": q.c1, "tool_version": __version__}


def cache_path(q: EnumQuery, root: Path) -> Path:
    return root / f"enum_k{q.k}_sq{q.square}_c{q.c1}.json"


def load(q: EnumQuery, root: Path) -> list[HomologyClass] | None:
    path = cache_path(q, root)
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if doc.get("header") != _header(q):
        return None
    chart = std_chart(q.k)
    try:
        return [HomologyClass(chart, tuple(c)) for c in doc["classes"]]
    except (KeyError, TypeError, ValueError):
        return None


def store(q: EnumQuery, classes: list[HomologyClass], root: Path) -> None:
    root.mkdir(parents=True, exist_ok=True)
    doc = {"header": _header(q), "classes": [list(c.coeffs) for c in classes]}
    fd, tmp = tempfile.mkstemp(dir=root, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, sort_keys=True)
        os.replace(tmp, cache_path(q, root))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cached_enumerate(q: EnumQuery, root: Path | None = None, use_cache: bool = True, workers: int = 1) -> list[HomologyClass]:
    """Enumerate through the cache.  Cache failures degrade to recomputation."""
    if not use_cache:
        return enumerate_by_invariants(q, workers=workers)
    root = root or default_cache_dir()
    hit = load(q, root)
    if hit is not None:
        return hit
    classes = enumerate_by_invariants(q, workers=workers)
    try:
        store(q, classes, root)
    except OSError:
        pass  # read-only location; results are still correct
    return classes
