# @author Augustin Mortier
# @desc dpsub - Read config file

import json
from pathlib import Path

from dpsub.oracle.search import SearchBudget


def read():
    # read cli defaults
    with open(Path(Path(__file__).parent, "..", "config", "cfg.json")) as json_file:
        return json.load(json_file)


def budget(CFG, max_candidate_edges=None, max_states=None, timeout=None):
    """
    Returns the SearchBudget of the config, with the given values overriding it.
    """
    values = dict(CFG["budget"])
    for key, value in (
        ("max_candidate_edges", max_candidate_edges),
        ("max_states", max_states),
        ("timeout", timeout),
    ):
        if value is not None:
            values[key] = value
    return SearchBudget(**values)
