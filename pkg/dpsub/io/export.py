# @author Augustin Mortier
# @desc dpsub - DOT and JSON export

import networkx as nx

from dpsub.io.write_instance import dumps
from dpsub.subgraph import Subgraph, branching_vertices

FORMATS = ("dot", "json")


def to_networkx(obj):
    """
    Returns a networkx graph with string attributes only, ready for DOT rendering.

    Terminals get `shape=box`, other vertices `shape=ellipse`; branching vertices of a subgraph are filled
    and tagged `branching=true`. Edges of weighted digraphs carry their weight and kind.

    Args:
        obj (Instance | TerminalGraph | WeightedDigraph | Subgraph): object to be drawn.
    """
    host = obj.host if isinstance(obj, Subgraph) else obj
    source = obj.to_networkx()
    graph = nx.DiGraph(name="dpsub") if getattr(host, "directed", False) else nx.Graph(name="dpsub")
    branching = set(branching_vertices(obj)[1]) if isinstance(obj, Subgraph) else set()
    for v in sorted(source.nodes):
        attributes = {
            "label": host.labels[v],
            "shape": "box" if host.is_terminal(v) else "ellipse",
        }
        if v in branching:
            attributes.update(style="filled", fillcolor="lightgrey", branching="true")
        graph.add_node(v, **attributes)
    for u, v, data in source.edges(data=True):
        attributes = {}
        if "weight" in data:
            attributes = {"weight": str(data["weight"]), "kind": data["kind"], "label": str(data["weight"])}
        graph.add_edge(u, v, **attributes)
    return graph


def to_dot(obj):
    """
    Returns the DOT text of an instance, a graph, a weighted digraph or a subgraph.

    Example:
        ```python
        import dpsub
        G = dpsub.generators.zero.gen_gzero(2)
        dpsub.io.export.to_dot(G).count("shape=box")
        # 5
        ```
    """
    return nx.nx_pydot.to_pydot(to_networkx(obj)).to_string()


def to_json(obj):
    """Returns the JSON document of obj, as text."""
    return dumps(obj).decode()


def export(obj, fmt="dot"):
    """
    Exports obj in the given format.

    Args:
        obj (Instance | TerminalGraph | WeightedDigraph | Subgraph): object to be exported.
        fmt (str, optional): `dot` or `json`.

    Returns:
        (str): text.
    """
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}, expected one of {FORMATS}.")
    return to_dot(obj) if fmt == "dot" else to_json(obj)
