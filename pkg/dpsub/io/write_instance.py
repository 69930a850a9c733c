# @author Augustin Mortier
# @desc dpsub - Instance and subgraph writing methods

import warnings
from pathlib import Path

import orjson

from dpsub.generators.manhattan import WeightedDigraph
from dpsub.graph import TerminalGraph
from dpsub.instance import Instance
from dpsub.subgraph import Subgraph, branching_edges, branching_vertices
from dpsub.utils import fraction_to_pair

FORMAT_VERSION = 1


def _interval_document(G):
    return {
        "version": FORMAT_VERSION,
        "kind": "interval",
        "intervals": [
            [fraction_to_pair(interval.left), fraction_to_pair(interval.right)]
            for interval in G.intervals
        ],
        "terminals": list(G.terminal_flags),
        "labels": list(G.labels),
        "meta": G.meta,
    }


def _graph_document(G):
    return {
        "version": FORMAT_VERSION,
        "kind": "graph",
        "n": G.n,
        "edges": [list(edge) for edge in G.edges()],
        "terminals": list(G.terminal_flags),
        "labels": list(G.labels),
        "meta": G.meta,
    }


def _digraph_document(D):
    return {
        "version": FORMAT_VERSION,
        "kind": "digraph",
        "k": D.rows,
        "vertices": [list(D.position(v)) for v in range(D.n)],
        "edges": [
            {"source": u, "target": v, "weight": D.weight(u, v), "direction": D.edge_kind(u, v)}
            for u, v in D.edges()
        ],
        "terminals": list(D.terminal_flags),
        "meta": D.meta,
    }


def subgraph_stats(H):
    """
    Returns the size and branching metrics of a subgraph.

    Args:
        H (Subgraph): subgraph.
    """
    return {
        "vertices": len(H.vertex_set),
        "edges": len(H.edge_set),
        "branching_vertices": branching_vertices(H)[0],
        "branching_edges": branching_edges(H),
    }


def to_document(obj, stats=None):
    """
    Returns the JSON document of an instance, a graph, a weighted digraph or a subgraph.

    Rationals are written as [numerator, denominator] pairs and interval instances in canonical order,
    so that reading a document gives back an equal object.

    Args:
        obj (Instance | TerminalGraph | WeightedDigraph | Subgraph): object to be serialized.
        stats (dict, optional): extra statistics stored with a subgraph.

    Returns:
        (dict): document.
    """
    if isinstance(obj, Subgraph):
        return {
            "version": FORMAT_VERSION,
            "kind": "subgraph",
            "host": to_document(obj.host),
            "vertices": obj.vertices(),
            "edges": [list(edge) for edge in obj.edges()],
            "stats": {**subgraph_stats(obj), **(stats or {})},
        }
    if isinstance(obj, Instance):
        return _interval_document(obj)
    if isinstance(obj, WeightedDigraph):
        return _digraph_document(obj)
    if isinstance(obj, TerminalGraph):
        return _graph_document(obj)
    raise TypeError(f"Cannot serialize an object of type {type(obj).__name__}.")


def dumps(obj, stats=None):
    """Returns the indented JSON document of obj, as bytes."""
    return orjson.dumps(to_document(obj, stats=stats), option=orjson.OPT_INDENT_2)


def write(obj, path, stats=None, verbose=False):
    """
    Writing method for instances, graphs, weighted digraphs and subgraphs.

    Args:
        obj (Instance | TerminalGraph | WeightedDigraph | Subgraph): object to be written.
        path (str | Path): output file.
        stats (dict, optional): extra statistics stored with a subgraph.
        verbose (bool, optional): warn when an existing file is overwritten.

    Returns:
        (Path): written file.
    """
    path = Path(path)
    if path.exists() and verbose:
        warnings.warn(f"{path} already exists and will be overwritten.")
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as json_file:
        json_file.write(dumps(obj, stats=stats))
    return path
