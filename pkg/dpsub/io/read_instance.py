# @author Augustin Mortier
# @desc dpsub - Instance and subgraph reading methods

from pathlib import Path

import orjson

from dpsub.generators.manhattan import WeightedDigraph
from dpsub.graph import TerminalGraph
from dpsub.instance import UnitPointInstance, build_instance
from dpsub.io.write_instance import FORMAT_VERSION
from dpsub.subgraph import Subgraph
from dpsub.utils import pair_to_fraction

KINDS = ("interval", "graph", "digraph", "subgraph")


def _interval(doc):
    intervals = [(pair_to_fraction(left), pair_to_fraction(right)) for left, right in doc["intervals"]]
    labels, meta = doc.get("labels"), doc.get("meta")
    if (meta or {}).get("flavor") == "unit_point":
        return UnitPointInstance(intervals, doc["terminals"], labels=labels, meta=meta)
    return build_instance(intervals, doc["terminals"], labels=labels, meta=meta)


def _graph(doc):
    return TerminalGraph.from_edges(
        doc["n"], [tuple(edge) for edge in doc["edges"]], doc["terminals"], labels=doc.get("labels"), meta=doc.get("meta")
    )


def _digraph(doc):
    D = WeightedDigraph(
        doc["k"],
        [(e["source"], e["target"], e["weight"], e["direction"]) for e in doc["edges"]],
        doc["terminals"],
        meta=doc.get("meta"),
    )
    for v, cell in enumerate(doc.get("vertices", [])):
        if tuple(cell) != D.position(v):
            raise ValueError(f"Vertex {v} is listed at {cell}, expected {D.position(v)}.")
    return D


def _subgraph(doc):
    host = from_document(doc["host"])
    return Subgraph(host, doc["vertices"], [tuple(edge) for edge in doc["edges"]])


def from_document(doc):
    """
    Builds an instance, a graph, a weighted digraph or a subgraph from its JSON document.

    Args:
        doc (dict): document written by `dpsub.io.write_instance`.

    Returns:
        (Instance | TerminalGraph | WeightedDigraph | Subgraph): object.

    Raises:
        ValueError: unknown version or kind.
    """
    if doc.get("version") != FORMAT_VERSION:
        raise ValueError(f"Unsupported format version {doc.get('version')}, expected {FORMAT_VERSION}.")
    kind = doc.get("kind", "interval")
    readers = {"interval": _interval, "graph": _graph, "digraph": _digraph, "subgraph": _subgraph}
    if kind not in readers:
        raise ValueError(f"Unknown document kind {kind!r}, expected one of {KINDS}.")
    return readers[kind](doc)


def loads(data):
    """Builds an object from JSON text or bytes."""
    return from_document(orjson.loads(data))


def read(path):
    """
    Reading method for files written by `dpsub.io.write_instance.write`.

    Args:
        path (str | Path): JSON file.

    Returns:
        (Instance | TerminalGraph | WeightedDigraph | Subgraph): object.
    """
    with open(Path(path), "rb") as json_file:
        return loads(json_file.read())


def read_stats(path):
    """Returns the statistics stored with a subgraph file, an empty dict for other kinds."""
    with open(Path(path), "rb") as json_file:
        return orjson.loads(json_file.read()).get("stats", {})
