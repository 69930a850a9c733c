# @author Augustin Mortier
# @desc dpsub - Scaling sweep of the DAS and DPS constructions

import concurrent.futures
import warnings

import numpy as np
import pandas as pd
from rich.progress import Progress

from dpsub.construction.das import build_das
from dpsub.construction.dps import build_dps
from dpsub.generators.random import gen_random
from dpsub.subgraph import branching_vertices, verify_approx, verify_preserving
from dpsub.utils import klogk

COLUMNS = [
    "k",
    "n",
    "trials",
    "das_mean",
    "das_max",
    "das_bound_ok",
    "dps_mean",
    "dps_max",
    "dps_ratio",
    "max_level_ratio",
    "repaired",
    "verified",
    "c_fit",
]


def trial_seed(seed, k, trial):
    """Seed of one trial, derived from the sweep seed."""
    return int(np.random.SeedSequence([seed, k, trial]).generate_state(1)[0])


def run_trial(k, trial, seed=0, n_factor=3, flavor="general"):
    """
    Builds both subgraphs on one random instance and returns their metrics.

    Args:
        k (int): number of terminals.
        trial (int): trial number.
        seed (int, optional): sweep seed.
        n_factor (int, optional): non-terminals per terminal.
        flavor (str, optional): flavor of `gen_random`.

    Returns:
        (dict): metrics of the trial.
    """
    n = k * (n_factor + 1)
    G = gen_random(n, k, seed=trial_seed(seed, k, trial), flavor=flavor)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        das = build_das(G).subgraph
        dps = build_dps(G)
    levels = [
        record.added / (3 * record.terminals) for record in dps.stats.levels if record.terminals > 0
    ]
    return {
        "k": k,
        "n": n,
        "das": branching_vertices(das)[0],
        "dps": branching_vertices(dps.subgraph)[0],
        "das_ok": verify_approx(G, das, 1).ok,
        "dps_ok": verify_preserving(G, dps.subgraph).ok,
        "level_ratio": max(levels, default=0.0),
        "repaired": len(dps.stats.repaired_pairs),
    }


def summarize(results):
    """
    Aggregates trial metrics per k, and fits a single constant c in `max dps branching ≈ c k log2 k`.

    Args:
        results (list): dicts returned by run_trial.

    Returns:
        (pandas.DataFrame): one row per k.
    """
    if not results:
        return pd.DataFrame(columns=COLUMNS)
    df = pd.DataFrame(results)
    rows = []
    for k, group in df.groupby("k", sort=True):
        rows.append(
            {
                "k": int(k),
                "n": int(group["n"].iloc[0]),
                "trials": len(group),
                "das_mean": float(group["das"].mean()),
                "das_max": int(group["das"].max()),
                "das_bound_ok": bool(group["das"].max() <= 3 * k),
                "dps_mean": float(group["dps"].mean()),
                "dps_max": int(group["dps"].max()),
                "dps_ratio": float(group["dps"].max() / klogk(k)) if k >= 2 else 0.0,
                "max_level_ratio": float(group["level_ratio"].max()),
                "repaired": int(group["repaired"].sum()),
                "verified": bool(group["das_ok"].all() and group["dps_ok"].all()),
            }
        )
    table = pd.DataFrame(rows)
    x = np.array([klogk(k) for k in table["k"]])
    y = table["dps_max"].to_numpy(dtype=float)
    c_fit = float(np.linalg.lstsq(x[:, None], y, rcond=None)[0][0]) if np.any(x > 0) else 0.0
    table["c_fit"] = c_fit
    return table[COLUMNS]


def run_experiment(ks, trials, seed=0, n_factor=3, flavor="general", workers=1, progress_bar=False):
    """
    Runs `trials` random instances for every k.

    Args:
        ks (list): numbers of terminals.
        trials (int): trials per k.
        seed (int, optional): sweep seed; the table only depends on it and on the other arguments.
        n_factor (int, optional): non-terminals per terminal.
        flavor (str, optional): flavor of `gen_random`.
        workers (int, optional): number of worker processes; 1 runs in the current process.
        progress_bar (bool, optional): show a progress bar.

    Returns:
        (pandas.DataFrame): table of summarize.
    """
    jobs = [(k, trial) for k in ks for trial in range(trials)]
    results = []
    with Progress(disable=not progress_bar) as progress:
        task = progress.add_task("experiment :rocket:" if workers > 1 else "experiment", total=len(jobs))
        if workers > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [
                    executor.submit(run_trial, k, trial, seed=seed, n_factor=n_factor, flavor=flavor)
                    for k, trial in jobs
                ]
                for future in concurrent.futures.as_completed(futures):
                    results.append(future.result())
                    progress.update(task, advance=1)
        else:
            for k, trial in jobs:
                results.append(run_trial(k, trial, seed=seed, n_factor=n_factor, flavor=flavor))
                progress.update(task, advance=1)
    return summarize(results)
