import pandas as pd
import pytest

from dpsub.cli.utils import config, experiment
from dpsub.oracle.search import SearchBudget


# test class
class TestConfig:
    def test_read(self):
        CFG = config.read()
        # test values
        assert CFG["experiment"]["k"] == [4, 8, 16, 32, 64, 128]
        assert CFG["random"]["flavor"] == "general"

    def test_budget(self):
        CFG = config.read()
        # test types
        assert type(config.budget(CFG)) is SearchBudget
        # test values
        assert config.budget(CFG) == SearchBudget()
        assert config.budget(CFG, timeout=5.0).timeout == 5.0
        assert config.budget(CFG, max_states=10).max_candidate_edges == 22

class TestExperiment:
    def test_trial_seed(self):
        # test values
        assert experiment.trial_seed(0, 4, 1) == experiment.trial_seed(0, 4, 1)
        assert experiment.trial_seed(0, 4, 1) != experiment.trial_seed(0, 4, 2)

    def test_run_trial(self):
        trial = experiment.run_trial(4, 0, seed=2)
        # test values
        assert (trial["k"], trial["n"]) == (4, 16)
        assert trial["das_ok"] and trial["dps_ok"]
        assert trial["das"] <= 12

    def test_summarize(self):
        results = [
            {"k": 2, "n": 8, "das": 1, "dps": 2, "das_ok": True, "dps_ok": True, "level_ratio": 0.5, "repaired": 0},
            {"k": 4, "n": 16, "das": 3, "dps": 8, "das_ok": True, "dps_ok": False, "level_ratio": 1.0, "repaired": 1},
        ]
        table = experiment.summarize(results)
        # test values
        assert list(table.columns) == experiment.COLUMNS
        assert table["dps_ratio"].tolist() == [1.0, 1.0]
        assert table["verified"].tolist() == [True, False]
        assert table["c_fit"].iloc[0] == pytest.approx(1.0)
        assert experiment.summarize([]).empty

    def test_deterministic(self):
        first = experiment.run_experiment([4], 2, seed=5)
        second = experiment.run_experiment([4], 2, seed=5)
        # test values
        pd.testing.assert_frame_equal(first, second)
        assert first["trials"].tolist() == [2]

@pytest.mark.slow
def test_growth():
    CFG = config.read()
    sweep = CFG["experiment"]
    table = experiment.run_experiment(
        sweep["k"], sweep["trials"], seed=0, n_factor=sweep["n_factor"], flavor=sweep["flavor"]
    )
    # test values
    assert table["k"].tolist() == [4, 8, 16, 32, 64, 128]
    assert table["verified"].all()
    assert table["das_bound_ok"].all()
    assert (table["repaired"] == 0).all()
    assert (table["max_level_ratio"] <= 1.0).all()
    assert (table["dps_ratio"] <= 1.0).all()
    assert 0 < table["c_fit"].iloc[0] <= 1.0
