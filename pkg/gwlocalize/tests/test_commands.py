import json
from io import StringIO
from pathlib import Path

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from gwlocalize.engine.exceptions import NonGenericWeights
from gwlocalize.engine.runner import RunConfig, run_compute

VERSION_FILE = Path(__file__).resolve().parents[2] / "VERSION"


def run(command, **options):
    out = StringIO()
    call_command(command, stdout=out, **options)
    return json.loads(out.getvalue())


class TestComputeCommand:
    def test_lines_on_cubic(self, tmp_path):
        result = run("compute", genus=0, n=3, a=3, d=1, seeds="0,1", cache_dir=str(tmp_path))
        assert result["value"] == {"num": "27", "den": "1"}
        assert result["agree"] is True
        assert result["lociCount"] == 6
        assert [s["seed"] for s in result["perSeed"]] == [0, 1]
        assert result["config"]["n"] == 3
        assert result["config"]["seeds"] == [0, 1]
        assert result["schemaVersion"] == 1
        assert result["engineVersion"] == VERSION_FILE.read_text().strip()
        assert result["breakdown"] is None

    def test_genus_one_degree_one(self):
        result = run("compute", genus=1, n=4, a=5, d=1, seeds="0,1")
        assert result["value"] == {"num": "2875", "den": "12"}
        assert result["lociCount"] == 0

    def test_breakdown(self):
        result = run("compute", genus=0, n=3, a=3, d=1, seeds="0,1", breakdown=True)
        assert len(result["breakdown"]) == 6
        assert all(set(item) == {"locusId", "kind", "value", "autOrder"} for item in result["breakdown"])

    def test_bps_numbers(self):
        result = run("compute", genus=0, n=4, a=5, d=2, seeds="0,1")
        assert result["bps"]["2"] == {"num": "609250", "den": "1"}
        assert result["bps"]["1"] == {"num": "2875", "den": "1"}

    def test_out_file(self, tmp_path):
        target = tmp_path / "result.json"
        call_command("compute", genus=0, n=3, a=3, d=1, seeds="0,1", out=str(target))
        assert json.loads(target.read_text())["value"]["num"] == "27"

    def test_invalid_config(self):
        with pytest.raises(CommandError) as error:
            call_command("compute", genus=1, n=3, a=3, d=1, seeds="0,1")
        assert error.value.returncode == 2

    def test_duplicate_seeds(self):
        with pytest.raises(CommandError) as error:
            call_command("compute", genus=0, n=3, a=3, d=1, seeds="1,1")
        assert error.value.returncode == 2

    def test_no_finite_count(self):
        with pytest.raises(CommandError) as error:
            call_command("compute", genus=0, n=3, a=4, d=1, seeds="0,1")
        assert error.value.returncode == 2

    def test_weight_dependence(self, monkeypatch):
        from gwlocalize.engine import runner

        def fake(config, seed):
            return runner.Evaluation(runner.Fraction(seed), seed, seed, 1)

        monkeypatch.setattr(runner, "_evaluate", fake)
        out = StringIO()
        with pytest.raises(CommandError) as error:
            call_command("compute", genus=0, n=3, a=3, d=1, seeds="0,1", stdout=out)
        assert error.value.returncode == 3
        assert json.loads(out.getvalue())["agree"] is False

    def test_degenerate_weights(self, monkeypatch):
        from gwlocalize.engine import runner

        def degenerate(config, seed):
            raise NonGenericWeights("stayed degenerate", seed=seed)

        monkeypatch.setattr(runner, "_evaluate", degenerate)
        with pytest.raises(CommandError) as error:
            call_command("compute", genus=0, n=3, a=3, d=1, seeds="0,1")
        assert error.value.returncode == 4


class TestRunCompute:
    def test_document(self):
        document = run_compute(RunConfig(command="compute", n=3, a=3, d=1, seeds=[0, 1]))
        assert document["value"] == {"num": "27", "den": "1"}
        assert document["perSeed"][1]["value"] == {"num": "27", "den": "1"}

    def test_from_options(self):
        config = RunConfig.from_options(command="compute", n=3, a=3, d=1, seeds="0,1", cache_dir=None)
        assert config.seeds == [0, 1]
        assert config.genus == 0


class TestEnumerateCommand:
    def test_refined_trees(self, tmp_path):
        records = run("enumerate", kind="refined-trees", n=1, d=2, k=0, cache_dir=str(tmp_path))
        assert len(records) == 4
        for record in records:
            assert record["encoding"].startswith("R")
            assert record["A_order"] == 2
            assert record["locusData"]["dPlus"] in (1, 2)

    def test_genus_zero_trees(self, tmp_path):
        records = run("enumerate", kind="g0-trees", n=4, d=1, cache_dir=str(tmp_path))
        assert len(records) == 10
        assert all(record["aut"] == 1 and record["deg"] == [1] for record in records)

    def test_triples(self):
        records = run("enumerate", kind="triples", d=3, k=2)
        assert len(records) == 12
        assert {"label": "(1;{},{1,2})", "m": 1, "jP": [], "jB": [1, 2]} in records

    def test_curve_splits(self):
        records = run("enumerate", kind="curve-splits", genus=1, k=3)
        assert len(records) == 4

    def test_relative_curve_splits(self):
        records = run("enumerate", kind="curve-splits", genus=0, k=3, relative="1")
        assert all(any(1 in block for block in record["blocks"]) for record in records)

    def test_malformed_relative_marks(self):
        with pytest.raises(CommandError) as error:
            call_command("enumerate", kind="curve-splits", genus=0, k=3, relative="a")
        assert error.value.returncode == 2

    def test_map_splits(self):
        records = run("enumerate", kind="map-splits", d=2, k=0)
        assert [record["label"] for record in records] == ["(2;{},{})"]


class TestIntegralsCommand:
    def test_queries(self):
        results = run("integrals", query=["g0:2,1,0,0,0,0", "blowup:7,1", "g1:1"])
        assert [r["value"] for r in results] == [
            {"num": "3", "den": "1"},
            {"num": "210", "den": "1"},
            {"num": "1", "den": "24"},
        ]

    def test_malformed(self):
        with pytest.raises(CommandError) as error:
            call_command("integrals", query=["g7:1"])
        assert error.value.returncode == 2


class TestCheckWeightsCommand:
    def test_agreement(self):
        document = run("checkweights", genus=0, n=3, a=3, d=1, seeds="0,1,2")
        assert document["agree"] is True
        assert document["values"]["2"] == {"num": "27", "den": "1"}

    def test_needs_two_seeds(self):
        with pytest.raises(CommandError) as error:
            call_command("checkweights", genus=0, n=3, a=3, d=1, seeds="0")
        assert error.value.returncode == 2

    def test_disagreement_report(self, monkeypatch):
        from gwlocalize.engine import runner

        def fake(config, seed):
            return runner.Evaluation(runner.Fraction(seed, 3), seed, seed, 1)

        monkeypatch.setattr(runner, "_evaluate", fake)
        out = StringIO()
        with pytest.raises(CommandError) as error:
            call_command("checkweights", genus=0, n=3, a=3, d=1, seeds="0,1", stdout=out)
        assert error.value.returncode == 3
        document = json.loads(out.getvalue())
        assert document["agree"] is False
        assert document["values"] == {"0": {"num": "0", "den": "1"}, "1": {"num": "1", "den": "3"}}
        assert document["report"].startswith("2 distinct values")
        assert document["config"]["seeds"] == [0, 1]
