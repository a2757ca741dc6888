from collections.abc import Iterable
from typing import Union

import networkx as nx

from .structure import HalfEdgeStructure, OrientedGraph

AnyGraph = Union[HalfEdgeStructure, OrientedGraph]


def _structure(graph: AnyGraph) -> HalfEdgeStructure:
    return graph.structure if isinstance(graph, OrientedGraph) else graph


def to_networkx(graph: AnyGraph) -> nx.MultiGraph:
    """Multigraph on the vertices, one edge per half-edge pair keyed by its
    smaller half-edge."""
    structure = _structure(graph)
    result = nx.MultiGraph()
    result.add_nodes_from(range(structure.num_vertices))
    for h, other in structure.edges():
        result.add_edge(structure.attach[h], structure.attach[other], key=h)
    return result


def vertex_components(
    num_vertices: int, pairs: Iterable[tuple[int, int]]
) -> list[frozenset[int]]:
    """Components of the graph on range(num_vertices) spanned by vertex pairs."""
    graph = nx.Graph()
    graph.add_nodes_from(range(num_vertices))
    graph.add_edges_from(pairs)
    return sorted((frozenset(c) for c in nx.connected_components(graph)), key=min)


def components(graph: AnyGraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by least vertex."""
    structure = _structure(graph)
    attach = structure.attach
    pairs = ((attach[h], attach[other]) for h, other in structure.edges())
    return vertex_components(structure.num_vertices, pairs)


def component_count(graph: AnyGraph) -> int:
    structure = _structure(graph)
    if not structure.num_vertices:
        return 0
    return nx.number_connected_components(to_networkx(structure))


def is_connected(graph: AnyGraph) -> bool:
    return component_count(graph) == 1


def bridges(graph: AnyGraph) -> list[tuple[int, int]]:
    """Edges (as half-edge pairs) whose removal disconnects their component."""
    structure = _structure(graph)
    multigraph = to_networkx(structure)
    multigraph.remove_edges_from(list(nx.selfloop_edges(multigraph, keys=True)))
    found = set(nx.bridges(multigraph))
    result = []
    for h, other in structure.edges():
        u, v = structure.attach[h], structure.attach[other]
        if (u, v) in found or (v, u) in found:
            result.append((h, other))
    return result


def has_bridge(graph: AnyGraph) -> bool:
    return bool(bridges(graph))


def is_1PI(graph: AnyGraph) -> bool:  # noqa: N802
    return is_connected(graph) and not has_bridge(graph)
