import pandas as pd
import pytest
from typer.testing import CliRunner

from dpsub.cli.dpsub import app
from dpsub.cli.utils.experiment import COLUMNS
from dpsub.io import read_instance
from dpsub.subgraph import Subgraph

runner = CliRunner()


# arrange test
@pytest.fixture
def random_file(tmp_path):
    path = tmp_path / "random.json"
    result = runner.invoke(app, ["gen", "random", "--k", "5", "--n", "20", "--seed", "3", "--out", str(path)])
    assert result.exit_code == 0
    return path

# test class
class TestGen:
    def test_gzero(self, tmp_path):
        result = runner.invoke(app, ["gen", "gzero", "--k", "5", "--out", str(tmp_path / "gzero.json")])
        # test values
        assert result.exit_code == 0
        assert "gzero: 17 vertices, 51 edges, 11 terminals, 6 non-terminals" in result.stdout
        assert (tmp_path / "gzero.json").exists()

    def test_gint(self, tmp_path):
        result = runner.invoke(app, ["gen", "gint", "--k", "4", "--out", str(tmp_path / "gint.json")])
        # test values
        assert result.exit_code == 0
        assert "24 vertices" in result.stdout
        assert "12 terminals" in result.stdout

    def test_gset(self, tmp_path):
        path = tmp_path / "gset.json"
        result = runner.invoke(app, ["gen", "gset", "--subset", "1,2", "--subset", "2", "--out", str(path)])
        G = read_instance.read(path)
        # test values
        assert result.exit_code == 0
        assert G.meta["setcover"] == {"n": 2, "subsets": [[1, 2], [2]]}

    def test_random_deterministic(self, tmp_path, random_file):
        again = tmp_path / "again.json"
        runner.invoke(app, ["gen", "random", "--k", "5", "--n", "20", "--seed", "3", "--out", str(again)])
        # test values
        assert again.read_bytes() == random_file.read_bytes()

    def test_invalid(self, tmp_path):
        result = runner.invoke(app, ["gen", "manhattan", "--k", "3", "--out", str(tmp_path / "m.json")])
        # test values
        assert result.exit_code == 1
        assert not (tmp_path / "m.json").exists()

class TestBuild:
    def test_dps(self, tmp_path, random_file):
        out = tmp_path / "dps.json"
        result = runner.invoke(app, ["build", "dps", str(random_file), "--out", str(out)])
        stats = read_instance.read_stats(out)
        # test values
        assert result.exit_code == 0
        assert "preserving: ok" in result.stdout
        assert stats["mode"] == "dps"
        assert stats["ok"] is True

    def test_das(self, random_file):
        result = runner.invoke(app, ["build", "das", str(random_file), "--check"])
        # test values
        assert result.exit_code == 0
        assert "approximating (+1): ok" in result.stdout

    def test_not_interval(self, tmp_path):
        path = tmp_path / "gset.json"
        runner.invoke(app, ["gen", "gset", "--subset", "1", "--out", str(path)])
        result = runner.invoke(app, ["build", "dps", str(path)])
        # test values
        assert result.exit_code == 1

class TestVerify:
    def test_subgraph(self, tmp_path, random_file):
        out = tmp_path / "das.json"
        runner.invoke(app, ["build", "das", str(random_file), "--out", str(out)])
        # test values
        assert runner.invoke(app, ["verify", str(out), "--slack", "1"]).exit_code == 0

    def test_instance(self, random_file):
        # test values
        assert runner.invoke(app, ["verify", str(random_file)]).exit_code == 1

class TestOracle:
    def test_setcover(self, tmp_path):
        path = tmp_path / "gset.json"
        runner.invoke(app, ["gen", "gset", "--universe", "2", "--subset", "1,2", "--out", str(path)])
        result = runner.invoke(app, ["oracle", "setcover", str(path)])
        # test values
        assert result.exit_code == 0
        assert "minimum set cover: 1" in result.stdout
        assert "equivalent: ok" in result.stdout

    def test_das_witness(self, tmp_path):
        path, out = tmp_path / "hard.json", tmp_path / "witness.json"
        runner.invoke(app, ["gen", "hard", "--k", "4", "--out", str(path)])
        result = runner.invoke(app, ["oracle", "das", str(path), "--out", str(out)])
        # test types
        assert type(read_instance.read(out)) is Subgraph
        # test values
        assert result.exit_code == 0
        assert read_instance.read_stats(out)["mode"] == "das"

    def test_budget(self, tmp_path):
        path = tmp_path / "gzero.json"
        runner.invoke(app, ["gen", "gzero", "--k", "4", "--out", str(path)])
        result = runner.invoke(app, ["oracle", "dps", str(path)])
        # test values
        assert result.exit_code == 1
        assert "budget" in result.stdout

    def test_not_gset(self, random_file):
        # test values
        assert runner.invoke(app, ["oracle", "setcover", str(random_file)]).exit_code == 1

def test_experiment(tmp_path):
    out = tmp_path / "experiment.csv"
    result = runner.invoke(
        app,
        ["experiment", "--k", "4", "--k", "8", "--trials", "2", "--workers", "1", "--no-progress-bar", "--out", str(out)],
    )
    table = pd.read_csv(out)
    # test values
    assert result.exit_code == 0
    assert list(table.columns) == COLUMNS
    assert table["k"].tolist() == [4, 8]
    assert table["verified"].all()

class TestExport:
    def test_dot(self, tmp_path):
        path = tmp_path / "gzero.json"
        runner.invoke(app, ["gen", "gzero", "--k", "2", "--out", str(path)])
        result = runner.invoke(app, ["export", str(path)])
        # test values
        assert result.exit_code == 0
        assert result.stdout.count("shape=box") == 5

    def test_json(self, tmp_path, random_file):
        out = tmp_path / "export.json"
        result = runner.invoke(app, ["export", str(random_file), "--format", "json", "--out", str(out)])
        # test values
        assert result.exit_code == 0
        assert read_instance.read(out) == read_instance.read(random_file)
