#!/usr/bin/env python3
# @author Augustin Mortier
# @desc dpsub - CLI for generating instances, building and verifying subgraphs

from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import List

import typer
from rich import print
from rich.markup import escape
from rich.table import Table

import dpsub.cli.utils as utils
from dpsub.construction.das import build_das
from dpsub.construction.dps import build_dps
from dpsub.generators import gint, hard, manhattan, random, setcover, zero
from dpsub.graph import TerminalGraph
from dpsub.instance import DisconnectedTerminalsError, Instance
from dpsub.io import export as exporter
from dpsub.io import read_instance, write_instance
from dpsub.oracle.search import BudgetExceeded, min_branching_das, min_branching_dps
from dpsub.oracle.setcover import min_set_cover
from dpsub.subgraph import Subgraph, branching_edges, branching_vertices, verify_approx

app = typer.Typer(no_args_is_help=True)


class Family(str, Enum):
    hard = "hard"
    manhattan = "manhattan"
    gint = "gint"
    gzero = "gzero"
    gset = "gset"
    random = "random"


class BuildMode(str, Enum):
    das = "das"
    dps = "dps"


class OracleMode(str, Enum):
    dps = "dps"
    das = "das"
    setcover = "setcover"


class Flavor(str, Enum):
    general = "general"
    unit_point = "unit_point"


class ExportFormat(str, Enum):
    dot = "dot"
    json = "json"


def _fail(message):
    print(f"[red]{escape(message)}[/red]")
    raise typer.Exit(code=1)


def _read(path):
    try:
        return read_instance.read(path)
    except (OSError, ValueError, KeyError) as error:
        _fail(f"Cannot read {path}: {error}")


def _counts(obj):
    non_terminals = obj.n - obj.k
    return f"{obj.n} vertices, {obj.edge_count} edges, {obj.k} terminals, {non_terminals} non-terminals"


def _parse_subsets(subsets):
    try:
        return tuple(frozenset(int(x) for x in s.split(",") if x.strip()) for s in subsets)
    except ValueError:
        raise typer.BadParameter(f"Subsets are comma-separated integers, got {subsets}.") from None


@app.command()
def gen(
    family: Family = typer.Argument(..., help="🧬 Instance family."),
    k: int = typer.Option(4, "--k", min=1, help="🔢 Number of terminals, or grid size."),
    n: int = typer.Option(None, "--n", min=1, help="🔢 Number of vertices (random)."),
    seed: int = typer.Option(0, "--seed", help="🎲 Seed (random)."),
    flavor: Flavor = typer.Option(None, "--flavor", help="🍦 Flavor (random)."),
    epsilon: str = typer.Option("1/100", "--epsilon", help="📏 Overlap half-width (hard)."),
    universe: int = typer.Option(None, "--universe", min=1, help="🌐 Universe size (gset)."),
    subsets: List[str] = typer.Option([], "--subset", help="🧺 Subset as comma-separated elements (gset)."),
    out: Path = typer.Option(None, "--out", help="📂 Output file, <family>.json by default."),
):
    """
    generate an instance file
    """
    CFG = utils.config.read()
    try:
        if family == Family.hard:
            obj = hard.gen_hard(k, epsilon=Fraction(epsilon))
        elif family == Family.manhattan:
            obj = manhattan.gen_manhattan(k)
        elif family == Family.gint:
            obj = gint.gen_gint(k)
        elif family == Family.gzero:
            obj = zero.gen_gzero(k)
        elif family == Family.gset:
            parsed = _parse_subsets(subsets)
            if universe is None:
                universe = max((max(s) for s in parsed if s), default=1)
            sc = setcover.SetCoverInstance(universe, parsed)
            obj = setcover.gen_gset(sc)
        else:
            flavor = (flavor or Flavor(CFG["random"]["flavor"])).value
            obj = random.gen_random(n if n is not None else 4 * k, k, seed=seed, flavor=flavor)
    except (ValueError, ZeroDivisionError) as error:
        _fail(str(error))
    path = write_instance.write(obj, out or Path(f"{family.value}.json"))
    print(f"{family.value}: {_counts(obj)}")
    print(f"written to {path}")


def _report(G, H, slack):
    report = verify_approx(G, H, slack)
    table = Table(title="subgraph")
    table.add_column("metric")
    table.add_column("value", justify="right")
    table.add_row("vertices", str(len(H.vertex_set)))
    table.add_row("edges", str(len(H.edge_set)))
    table.add_row("branching vertices", str(branching_vertices(H)[0]))
    table.add_row("branching edges", str(branching_edges(H)))
    print(table)
    kind = "preserving" if slack == 0 else f"approximating (+{slack})"
    print(f"branching vertices: {branching_vertices(H)[0]}")
    if report.ok:
        print(f"{kind}: ok")
    else:
        for violation in report.violations[:10]:
            print(
                f"[red]d({violation.u}, {violation.v}): host {violation.d_host}, subgraph {violation.d_sub}[/red]"
            )
        print(f"[red]{kind}: {len(report.violations)} violations[/red]")
    return report


@app.command()
def build(
    mode: BuildMode = typer.Argument(..., help="🏗️ Construction."),
    path_in: Path = typer.Argument(..., exists=True, readable=True, help="📂 Instance file."),
    out: Path = typer.Option(None, "--out", help="📂 Subgraph file."),
    check: bool = typer.Option(False, help="🔍 Debug mode: run the internal consistency checks."),
):
    """
    build a +1 approximating (das) or distance-preserving (dps) subgraph of an interval instance
    """
    G = _read(path_in)
    if not isinstance(G, Instance):
        _fail(f"{path_in} is not an interval instance.")
    try:
        if mode == BuildMode.das:
            H, slack, stats = build_das(G, check=check).subgraph, 1, {}
        else:
            result = build_dps(G, check=check)
            H, slack = result.subgraph, 0
            stats = {
                "levels": len(result.stats.levels),
                "repaired_pairs": len(result.stats.repaired_pairs),
            }
    except DisconnectedTerminalsError as error:
        _fail(str(error))
    report = _report(G, H, slack)
    if out is not None:
        write_instance.write(H, out, stats={"mode": mode.value, "slack": slack, "ok": report.ok, **stats})
        print(f"written to {out}")
    if not report.ok:
        raise typer.Exit(code=1)


@app.command()
def verify(
    path_in: Path = typer.Argument(..., exists=True, readable=True, help="📂 Subgraph file."),
    slack: int = typer.Option(0, "--slack", min=0, help="➕ Additive slack."),
):
    """
    verify the terminal distances of a subgraph file
    """
    H = _read(path_in)
    if not isinstance(H, Subgraph):
        _fail(f"{path_in} is not a subgraph file.")
    report = _report(H.host, H, slack)
    if not report.ok:
        raise typer.Exit(code=1)


@app.command()
def oracle(
    mode: OracleMode = typer.Argument(..., help="🔮 Quantity to compute."),
    path_in: Path = typer.Argument(..., exists=True, readable=True, help="📂 Instance file."),
    slack: int = typer.Option(1, "--slack", min=0, help="➕ Additive slack (das)."),
    terminal_branching: bool = typer.Option(True, help="🌿 Count terminals as branching vertices (dps)."),
    budget_edges: int = typer.Option(None, "--budget-edges", min=1, help="✂️ Largest number of candidate edges."),
    max_states: int = typer.Option(None, "--max-states", min=1, help="✂️ Largest number of search states."),
    timeout: float = typer.Option(None, "--timeout", min=0, help="⏱️ Time limit, in seconds."),
    out: Path = typer.Option(None, "--out", help="📂 Witness subgraph file."),
    progress_bar: bool = typer.Option(False, help="⌛ Show progress bar."),
):
    """
    compute exact minima by exhaustive search
    """
    CFG = utils.config.read()
    budget = utils.config.budget(CFG, budget_edges, max_states, timeout)
    G = _read(path_in)
    if isinstance(G, Subgraph):
        _fail(f"{path_in} is a subgraph file, expected an instance.")
    try:
        if mode == OracleMode.setcover:
            if not isinstance(G, TerminalGraph) or "setcover" not in G.meta:
                _fail(f"{path_in} is not a gset instance.")
            cover = min_set_cover(setcover.setcover_from_meta(G.meta))
            minimum, witness = min_branching_dps(
                G, count_terminal_branching=False, budget=budget, verbose=progress_bar
            )
            print(f"minimum set cover: {cover}")
            print(f"minimum non-terminal branching: {minimum}")
            if cover != minimum:
                _fail("the reduction does not match")
            print("equivalent: ok")
        elif mode == OracleMode.dps:
            minimum, witness = min_branching_dps(
                G, count_terminal_branching=terminal_branching, budget=budget, verbose=progress_bar
            )
            print(f"minimum branching vertices: {minimum}")
        else:
            minimum, witness = min_branching_das(G, slack=slack, budget=budget, verbose=progress_bar)
            print(f"minimum branching vertices (+{slack}): {minimum}")
    except BudgetExceeded as error:
        _fail(str(error))
    if out is not None:
        write_instance.write(witness, out, stats={"mode": mode.value, "minimum": minimum})
        print(f"written to {out}")


@app.command()
def experiment(
    ks: List[int] = typer.Option([], "--k", help="🔢 Numbers of terminals, from the config by default."),
    trials: int = typer.Option(None, "--trials", min=1, help="🔁 Trials per k."),
    seed: int = typer.Option(0, "--seed", help="🎲 Sweep seed."),
    n_factor: int = typer.Option(None, "--n-factor", min=0, help="🔢 Non-terminals per terminal."),
    flavor: Flavor = typer.Option(None, "--flavor", help="🍦 Flavor of the random instances."),
    workers: int = typer.Option(1, "--workers", min=1, envvar="NSLOTS", help="👷 Number of workers."),
    out: Path = typer.Option(Path("experiment.csv"), "--out", help="📂 CSV table."),
    progress_bar: bool = typer.Option(True, help="⌛ Show progress bar."),
):
    """
    run the scaling sweep and write the CSV table
    """
    CFG = utils.config.read()["experiment"]
    table = utils.experiment.run_experiment(
        list(ks) or CFG["k"],
        trials or CFG["trials"],
        seed=seed,
        n_factor=n_factor if n_factor is not None else CFG["n_factor"],
        flavor=(flavor.value if flavor is not None else CFG["flavor"]),
        workers=workers,
        progress_bar=progress_bar,
    )
    out.parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(out, index=False)
    print(f"{len(table)} rows written to {out}")
    if not table.empty:
        print(f"c_fit: {table['c_fit'].iloc[0]:.3f}")
    if not table["verified"].all() or not table["das_bound_ok"].all():
        _fail("some trials failed verification")


@app.command()
def export(
    path_in: Path = typer.Argument(..., exists=True, readable=True, help="📂 Instance or subgraph file."),
    fmt: ExportFormat = typer.Option(ExportFormat.dot, "--format", help="🖨️ Output format."),
    out: Path = typer.Option(None, "--out", help="📂 Output file, standard output by default."),
):
    """
    export an instance or a subgraph to DOT or JSON
    """
    obj = _read(path_in)
    text = exporter.export(obj, fmt.value)
    if out is None:
        typer.echo(text)
    else:
        out.write_text(text)
        print(f"written to {out}")


if __name__ == "__main__":
    app()
