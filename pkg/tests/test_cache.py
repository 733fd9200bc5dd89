import struct
from itertools import islice

import pytest

from chipfire import intermediate_configuration
from chipfire.cache import (
    CorruptCacheError,
    FORMAT_VERSION,
    MAGIC,
    cache_get,
    cache_path,
    cache_put,
    load_or_compute,
)


@pytest.fixture
def rows9(table):
    return table(9)


class TestRoundTrip:
    def test_put_then_get(self, tmp_path, rows9):
        cache_put(tmp_path, 9, rows9)
        assert cache_get(tmp_path, 9) == rows9

    def test_miss_returns_none(self, tmp_path):
        assert cache_get(tmp_path, 5) is None

    def test_bytes_are_stable(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        first = path.read_bytes()
        cache_put(tmp_path, 9, rows9)
        assert path.read_bytes() == first

    def test_no_temp_file_left_behind(self, tmp_path, rows9):
        cache_put(tmp_path, 9, rows9)
        assert [p.name for p in tmp_path.iterdir()] == [cache_path(tmp_path, 9).name]

    def test_huge_values_survive(self, tmp_path):
        rows = list(islice(intermediate_configuration(126), 3))
        cache_put(tmp_path, 126, rows)
        assert cache_get(tmp_path, 126) == rows


class TestCorruption:
    def test_checksum_mismatch(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        data = bytearray(path.read_bytes())
        data[len(data) // 2] ^= 0xFF
        path.write_bytes(bytes(data))
        with pytest.raises(CorruptCacheError):
            cache_get(tmp_path, 9)

    def test_version_mismatch(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        data = bytearray(path.read_bytes())
        struct.pack_into("<I", data, 4, FORMAT_VERSION + 1)
        path.write_bytes(bytes(data))  # checksum now stale as well
        with pytest.raises(CorruptCacheError):
            cache_get(tmp_path, 9)

    def test_wrong_magic(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        data = bytearray(path.read_bytes())
        data[:4] = b"NOPE"
        path.write_bytes(bytes(data))
        with pytest.raises(CorruptCacheError):
            cache_get(tmp_path, 9)

    def test_truncated(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        path.write_bytes(path.read_bytes()[:10])
        with pytest.raises(CorruptCacheError):
            cache_get(tmp_path, 9)

    def test_mislabeled_entry(self, tmp_path, rows9):
        src = cache_put(tmp_path, 9, rows9)
        src.rename(cache_path(tmp_path, 8))
        with pytest.raises(CorruptCacheError):
            cache_get(tmp_path, 8)

    def test_magic_constant(self):
        assert MAGIC == b"CHPF"


class TestLoadOrCompute:
    def test_populates_and_replays(self, tmp_path, rows9):
        assert load_or_compute(9, tmp_path) == rows9
        assert cache_path(tmp_path, 9).exists()
        assert load_or_compute(9, tmp_path) == rows9

    def test_recovers_from_corruption(self, tmp_path, rows9):
        path = cache_put(tmp_path, 9, rows9)
        path.write_bytes(b"garbage")
        assert load_or_compute(9, tmp_path) == rows9
        assert cache_get(tmp_path, 9) == rows9  # rewritten cleanly

    def test_without_cache_dir(self, monkeypatch, rows9):
        monkeypatch.delenv("CHIPFIRE_CACHE", raising=False)
        assert load_or_compute(9) == rows9

    def test_env_fallback(self, tmp_path, monkeypatch, rows9):
        monkeypatch.setenv("CHIPFIRE_CACHE", str(tmp_path))
        assert load_or_compute(9) == rows9
        assert cache_path(tmp_path, 9).exists()
