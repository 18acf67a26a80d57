"""On-disk cache of CountTables.

File layout, one table per file::

    <label> <max_n> <sha256 of the body>
    <n>\t<decimal value>
    ...

Anything that fails validation is logged and ignored, never trusted.
"""

from __future__ import annotations

import hashlib
import logging
import os
from pathlib import Path

from .tables import LABEL_BASE, CountTable

log = logging.getLogger(__name__)

ENV_VAR = "KLARNER_CACHE_DIR"
DEFAULT_DIR = ".klarner-cache"

# distinct names for f/F and g/G on case-insensitive filesystems
_FILENAMES = {"A": "A-fixed", "f": "f-typeA", "g": "g-typeB", "F": "F-bound", "G": "G-bound"}


class CacheError(ValueError):
    pass


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    return Path(os.environ.get(ENV_VAR) or DEFAULT_DIR)


def _path(directory: Path, label: str) -> Path:
    return directory / f"{_FILENAMES[label]}.tsv"


def _body(table: CountTable) -> str:
    return "".join(f"{n}\t{v}\n" for n, v in table.items())


def dumps(table: CountTable) -> str:
    body = _body(table)
    digest = hashlib.sha256(body.encode()).hexdigest()
    return f"{table.label} {table.max_n} {digest}\n{body}"


def loads(text: str) -> CountTable:
    header, _, body = text.partition("\n")
    parts = header.split()
    if len(parts) != 3:
        raise CacheError(f"bad header {header!r}")
    label, max_n, digest = parts
    if label not in LABEL_BASE:
        raise CacheError(f"unknown label {label!r}")
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        raise CacheError("checksum mismatch")
    values: dict[int, int] = {}
    for lineno, line in enumerate(body.splitlines(), start=2):
        n_text, sep, v_text = line.partition("\t")
        if not sep or not n_text.isdigit() or not v_text.isdigit():
            raise CacheError(f"line {lineno}: malformed entry {line!r}")
        values[int(n_text)] = int(v_text)
    try:
        table = CountTable.from_mapping(label, values)
    except ValueError as exc:
        raise CacheError(str(exc)) from exc
    if table.max_n != int(max_n):
        raise CacheError(f"header says max_n={max_n}, body reaches {table.max_n}")
    return table


def store(table: CountTable, directory: str | os.PathLike | None = None) -> Path:
    """Write ``table`` unless a cached table already covers a longer range."""
    d = cache_dir(directory)
    d.mkdir(parents=True, exist_ok=True)
    existing = load(table.label, table.max_n, d)
    if existing is not None and existing.max_n >= table.max_n:
        return _path(d, table.label)
    target = _path(d, table.label)
    tmp = target.with_suffix(".tmp")
    tmp.write_text(dumps(table))
    tmp.replace(target)
    return target


def load(label: str, max_n: int, directory: str | os.PathLike | None = None) -> CountTable | None:
    """The cached ``label`` table cut to ``max_n``, or None if unusable."""
    path = _path(cache_dir(directory), label)
    if not path.exists():
        return None
    try:
        table = loads(path.read_text())
    except (OSError, UnicodeDecodeError, CacheError) as exc:
        log.warning("ignoring corrupt cache file %s: %s", path, exc)
        return None
    if table.label != label:
        log.warning("ignoring cache file %s: holds %s, expected %s", path, table.label, label)
        return None
    if table.max_n < max_n:
        return None
    return table.prefix(max_n)
