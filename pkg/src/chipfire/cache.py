"""Versioned on-disk cache of computed row streams.

Layout of a cache file (all integers little-endian):

    magic      4 bytes  b"CHPF"
    version    u32      bumped on any format change; old files are rejected
    n          u32
    row_count  u64
    rows       row_count records of
                   index   u64
                   y_min   u64
                   length  u32
                   values  length * 16 bytes (unsigned 128-bit)
    crc32      u32      over everything above

A failed magic, version, structure, or checksum test raises
:class:`CorruptCacheError`; callers fall back to recomputing.  Writes go to
a temporary file in the same directory and are renamed into place, so a
reader never sees a half-written entry.
"""

from __future__ import annotations

import os
import struct
import zlib
from pathlib import Path
from typing import Iterable

from .core import ChipfireError, Row, intermediate_configuration

MAGIC = b"CHPF"
FORMAT_VERSION = 1

_HEADER = struct.Struct("<4sIIQ")
_ROW_HEAD = struct.Struct("<QQI")
_CRC = struct.Struct("<I")
_VALUE_BYTES = 16

ENV_CACHE_DIR = "CHIPFIRE_CACHE"


class CorruptCacheError(ChipfireError):
    """A cache entry failed its magic, version, structure, or checksum test."""


def cache_path(cache_dir: str | os.PathLike, n: int) -> Path:
    return Path(cache_dir) / f"rows-n{n}.bin"


def _encode(n: int, rows: list[Row]) -> bytes:
    parts = [_HEADER.pack(MAGIC, FORMAT_VERSION, n, len(rows))]
    for r in rows:
        parts.append(_ROW_HEAD.pack(r.index, r.y_min, len(r.values)))
        for v in r.values:
            parts.append(v.to_bytes(_VALUE_BYTES, "little"))
    body = b"".join(parts)
    return body + _CRC.pack(zlib.crc32(body))


def _decode(data: bytes, n: int) -> list[Row]:
    if len(data) < _HEADER.size + _CRC.size:
        raise CorruptCacheError("cache entry truncated")
    body, (crc,) = data[: -_CRC.size], _CRC.unpack(data[-_CRC.size:])
    if zlib.crc32(body) != crc:
        raise CorruptCacheError("cache entry checksum mismatch")
    magic, version, stored_n, count = _HEADER.unpack_from(body)
    if magic != MAGIC:
        raise CorruptCacheError("cache entry has wrong magic")
    if version != FORMAT_VERSION:
        raise CorruptCacheError(
            f"cache entry format version {version}, expected {FORMAT_VERSION}"
        )
    if stored_n != n:
        raise CorruptCacheError(f"cache entry is for n={stored_n}, expected n={n}")
    rows: list[Row] = []
    pos = _HEADER.size
    try:
        for _ in range(count):
            index, y_min, length = _ROW_HEAD.unpack_from(body, pos)
            pos += _ROW_HEAD.size
            values = tuple(
                int.from_bytes(body[pos + k * _VALUE_BYTES: pos + (k + 1) * _VALUE_BYTES], "little")
                for k in range(length)
            )
            pos += length * _VALUE_BYTES
            rows.append(Row(index=index, y_min=y_min, values=values))
    except (struct.error, ValueError) as exc:
        raise CorruptCacheError(f"cache entry malformed: {exc}") from exc
    if pos != len(body):
        raise CorruptCacheError("cache entry has trailing bytes")
    return rows


def cache_put(cache_dir: str | os.PathLike, n: int, rows: Iterable[Row]) -> Path:
    """Persist a row stream; atomic via write-temp-then-rename."""
    rows = list(rows)
    path = cache_path(cache_dir, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(_encode(n, rows))
    os.replace(tmp, path)
    return path


def cache_get(cache_dir: str | os.PathLike, n: int) -> list[Row] | None:
    """Stored rows for n, or None on a cache miss."""
    path = cache_path(cache_dir, n)
    if not path.exists():
        return None
    return _decode(path.read_bytes(), n)


def resolve_cache_dir(explicit: str | os.PathLike | None) -> Path | None:
    """Pick the cache directory: explicit flag first, then the environment."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_CACHE_DIR)
    return Path(env) if env else None


def load_or_compute(n: int, cache_dir: str | os.PathLike | None = None) -> list[Row]:
    """Rows for n, served from the cache when possible.

    A corrupt entry is silently replaced by a fresh computation.  With no
    cache directory the rows are simply computed.
    """
    directory = resolve_cache_dir(cache_dir)
    if directory is None:
        return list(intermediate_configuration(n))
    try:
        cached = cache_get(directory, n)
    except CorruptCacheError:
        cached = None
    if cached is not None:
        return cached
    rows = list(intermediate_configuration(n))
    cache_put(directory, n, rows)
    return rows
