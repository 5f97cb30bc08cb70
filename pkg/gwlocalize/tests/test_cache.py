import json
import threading

import pytest

from gwlocalize.engine.cache import EnumerationCache, cache_roundtrip
from gwlocalize.engine.exceptions import InvalidInput
from gwlocalize.engine.graphs import enumerate_genus0_trees


class TestEnumerationCache:
    def test_store_then_load(self, cache):
        first = cache_roundtrip("g0-trees", 4, 1, cache=cache)
        path = cache.path("g0-trees", 4, 1, 0)
        assert path.exists()
        second = cache_roundtrip("g0-trees", 4, 1, cache=cache)
        assert len(first) == len(second) == 10
        assert [g.encode() for g in first] == [g.encode() for g in second]
        assert cache.load("g0-trees", 4, 1, 0) == [g.encode() for g in enumerate_genus0_trees(4, 1)]

    def test_refined_trees(self, cache):
        trees = cache_roundtrip("refined-trees", 1, 2, cache=cache)
        assert len(trees) == 4
        assert cache_roundtrip("refined-trees", 1, 2, cache=cache) == trees

    def test_schema_bump_is_a_miss(self, cache, tmp_path):
        cache_roundtrip("g0-trees", 2, 1, cache=cache)
        bumped = EnumerationCache(cache.directory, schema_version=cache.schema_version + 1)
        assert bumped.load("g0-trees", 2, 1, 0) is None
        assert len(cache_roundtrip("g0-trees", 2, 1, cache=bumped)) == 3
        assert bumped.load("g0-trees", 2, 1, 0) is not None

    def test_corrupt_file_is_regenerated(self, cache):
        cache_roundtrip("g0-trees", 2, 1, cache=cache)
        path = cache.path("g0-trees", 2, 1, 0)
        path.write_text("{not json")
        assert cache.load("g0-trees", 2, 1, 0) is None
        assert len(cache_roundtrip("g0-trees", 2, 1, cache=cache)) == 3
        assert json.loads(path.read_text())["schema"] == cache.schema_version

    def test_tampered_records_fail_the_checksum(self, cache):
        cache_roundtrip("g0-trees", 2, 1, cache=cache)
        path = cache.path("g0-trees", 2, 1, 0)
        payload = json.loads(path.read_text())
        payload["encodings"] = payload["encodings"][1:]
        path.write_text(json.dumps(payload))
        assert cache.load("g0-trees", 2, 1, 0) is None

    def test_keys_are_distinct(self, cache):
        assert cache.path("g0-trees", 4, 1, 0) != cache.path("g0-trees", 4, 1, 1)
        assert cache.path("g0-trees", 4, 1, 0) != cache.path("g1-effective", 4, 1, 0)

    def test_concurrent_readers(self, cache):
        cache_roundtrip("g0-trees", 4, 1, cache=cache)
        results = []
        readers = [
            threading.Thread(target=lambda: results.append(cache.load("g0-trees", 4, 1, 0)))
            for _ in range(4)
        ]
        for reader in readers:
            reader.start()
        for reader in readers:
            reader.join()
        assert len(results) == 4
        assert all(result == results[0] and len(result) == 10 for result in results)

    def test_no_temporary_files_left(self, cache):
        cache_roundtrip("g0-trees", 2, 1, cache=cache)
        assert [p.name for p in cache.directory.iterdir() if p.name.endswith(".tmp")] == []

    def test_unknown_kind(self, cache):
        with pytest.raises(InvalidInput):
            cache_roundtrip("triples", 2, 1, cache=cache)
