import json

from gwlocalize.engine.graphs import _branches, _canonicalize, _forests
from gwlocalize.tasks import compute_invariant, warm_enumeration_cache


class TestTasks:
    def test_compute_invariant_writes_result(self, tmp_path):
        out = tmp_path / "lines.json"
        compute_invariant(0, 1, a=3, n=3, seeds="0,1", out=str(out))

        result = json.loads(out.read_text())
        assert result["value"] == {"num": "27", "den": "1"}
        assert result["agree"] is True

    def test_warm_enumeration_cache(self, settings, cache):
        settings.GWLOCALIZE = dict(settings.GWLOCALIZE, CACHE_DIR=str(cache.directory))
        warm_enumeration_cache(1, n=1)

        assert len(list(cache.directory.glob("*.json"))) == 3

    def test_tasks_release_enumeration_memo(self, tmp_path):
        compute_invariant(0, 1, a=3, n=3, seeds="0", out=str(tmp_path / "lines.json"))

        assert _branches.cache_info().currsize == 0
        assert _forests.cache_info().currsize == 0
        assert _canonicalize.cache_info().currsize == 0
