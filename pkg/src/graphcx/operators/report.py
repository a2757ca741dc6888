from collections.abc import Sequence
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from graphcx.chainspace import BasisSlice, Chain
from graphcx.graphcore import GraphClass, OrientedGraph, Term, canonicalize

from .differentials import (
    alpha_terms,
    edge_terms,
    expansion_terms,
    half_pair_terms,
    vertex_parts,
)


def _edge_bound(graph: OrientedGraph) -> int:
    return graph.structure.edge_count


def _pair_bound(graph: OrientedGraph) -> int:
    edges = graph.structure.edge_count
    return comb(2 * edges, 2) - edges


def _orbit_bound(graph: OrientedGraph) -> int:
    return _pair_bound(graph) // 2


def _expansion_bound(graph: OrientedGraph) -> int:
    half_edges = len(graph.structure.half_edges)
    parts = sum(
        len(vertex_parts(graph.structure.half_edges_at(v), full=False))
        for v in range(graph.num_vertices)
    )
    return parts * half_edges


_Enumerator = Callable[[OrientedGraph], Sequence[Optional[Term]]]

OPERATORS: dict[str, tuple[_Enumerator, Callable[[OrientedGraph], int]]] = {
    "E": (edge_terms, _edge_bound),
    "H": (half_pair_terms, _pair_bound),
    "delta_H": (expansion_terms, _expansion_bound),
    "alpha": (alpha_terms, _orbit_bound),
}


@dataclass(frozen=True)
class OperatorReport:
    operator: str
    basis: BasisSlice
    output: dict[GraphClass, Chain]
    raw_terms: int
    zero_terms: int
    distinct_classes: int
    bound: int

    def __post_init__(self):
        assert self.raw_terms <= self.bound, "more terms than the definition allows"


def apply_operator(name: str, basis: BasisSlice) -> OperatorReport:
    """Apply a term-level operator to every class of a slice and count terms."""
    enumerate_terms, bound_of = OPERATORS[name]
    output = {}
    raw = zero = bound = 0
    images: set[GraphClass] = set()
    for graph_class in basis:
        graph = graph_class.representative()
        terms = enumerate_terms(graph)
        bound += bound_of(graph)
        raw += len(terms)
        kept = []
        for term in terms:
            if term is None or not canonicalize(term[1])[1]:
                zero += 1
            else:
                kept.append(term)
        image = Chain.from_terms(kept)
        images.update(image)
        output[graph_class] = image
    return OperatorReport(name, basis, output, raw, zero, len(images), bound)
