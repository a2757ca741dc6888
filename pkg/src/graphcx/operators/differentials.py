"""The two differentials, the coboundary δ_H and the homotopy α."""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

from graphcx.chainspace import Chain, linear
from graphcx.errors import VerificationError
from graphcx.graphcore import (
    GraphClass,
    OrientedGraph,
    Term,
    contract_edge,
    contract_half_pair,
    cut_paste,
    expand_vertex_and_glue,
)

logger = logging.getLogger(__name__)


def edge_terms(graph: OrientedGraph) -> list[Term]:
    """One contraction per non-loop edge."""
    structure = graph.structure
    return [contract_edge(graph, h) for h, _ in structure.edges() if not structure.is_loop(h)]


def half_pairs(graph: OrientedGraph) -> list[tuple[int, int]]:
    """Unordered pairs {h, k} with k != h̄."""
    return [
        (h, k)
        for h, k in combinations(graph.structure.half_edges, 2)
        if k != graph.partner(h)
    ]


def half_pair_terms(graph: OrientedGraph) -> list[Optional[Term]]:
    """X_hk for every unordered pair; None where h and k share a vertex."""
    return [contract_half_pair(graph, h, k) for h, k in half_pairs(graph)]


def _orbit_pairs(graph: OrientedGraph) -> list[tuple[int, int]]:
    """One pair from every orbit {{x, y}, {x̄, ȳ}}."""
    result = []
    for x, y in half_pairs(graph):
        if x < min(graph.partner(x), graph.partner(y)):
            result.append((x, y))
    return result


def alpha_terms(graph: OrientedGraph) -> list[Term]:
    return [cut_paste(graph, x, y) for x, y in _orbit_pairs(graph)]


def vertex_parts(at_v: list[int], full: bool) -> list[frozenset[int]]:
    """Parts P of the half-edges at a vertex with |P|, |P̄| >= 2.

    Without `full` only the parts holding the least half-edge are listed.
    """
    first, rest = at_v[0], at_v[1:]
    result = []
    for size in range(1, len(rest) + 1):
        for chosen in combinations(rest, size):
            part = frozenset((first, *chosen))
            if 2 <= len(part) <= len(at_v) - 2:
                result.append(part)
                if full:
                    result.append(frozenset(at_v) - part)
    return result


def expansion_terms(graph: OrientedGraph, full: bool = False) -> list[Term]:
    """X^Ph over vertices v, parts P at v and half-edges h."""
    terms = []
    half_edges = graph.structure.half_edges
    for v in range(graph.num_vertices):
        at_v = graph.structure.half_edges_at(v)
        for part in vertex_parts(at_v, full):
            for h in half_edges:
                term = expand_vertex_and_glue(graph, v, part, h)
                if term is not None:
                    terms.append(term)
    return terms


@lru_cache(maxsize=None)
def _edge_image(graph_class: GraphClass) -> Chain:
    return Chain.from_terms(edge_terms(graph_class.representative()))


@lru_cache(maxsize=None)
def _half_pair_image(graph_class: GraphClass) -> Chain:
    terms = half_pair_terms(graph_class.representative())
    return Chain.from_terms(term for term in terms if term is not None)


@lru_cache(maxsize=None)
def _expansion_image(graph_class: GraphClass) -> Chain:
    return Chain.from_terms(expansion_terms(graph_class.representative()))


@lru_cache(maxsize=None)
def _full_expansion_image(graph_class: GraphClass) -> Chain:
    terms = expansion_terms(graph_class.representative(), full=True)
    return Chain.from_terms(terms, Fraction(1, 2))


@lru_cache(maxsize=None)
def _alpha_image(graph_class: GraphClass) -> Chain:
    return Chain.from_terms(alpha_terms(graph_class.representative()))


def boundary_E(c: Chain) -> Chain:  # noqa: N802
    """Sum of the single-edge contractions."""
    return linear(_edge_image)(c)


def boundary_H(c: Chain) -> Chain:  # noqa: N802
    """Sum of X_hk over unordered pairs of half-edges."""
    return linear(_half_pair_image)(c)


def delta_H(c: Chain, check: bool = False) -> Chain:  # noqa: N802
    """Vertex expansions reglued along a half-edge.

    Each pair (P, h), (P̄, h̄) gives the same term and is taken once through
    the part holding the least half-edge of its vertex.
    """
    result = linear(_expansion_image)(c)
    if check:
        full = delta_H_full(c)
        if full != result:
            raise VerificationError(f"δ_H forms disagree on {c!r}")
    return result


def delta_H_full(c: Chain) -> Chain:  # noqa: N802
    """Half the sum of X^Ph over every part P and half-edge h."""
    return linear(_full_expansion_image)(c)


def alpha(c: Chain) -> Chain:
    """Cut and paste without collapse over orbits {{x, y}, {x̄, ȳ}}."""
    return linear(_alpha_image)(c)


def cache_clear() -> None:
    for fn in (
        _edge_image,
        _half_pair_image,
        _expansion_image,
        _full_expansion_image,
        _alpha_image,
    ):
        fn.cache_clear()
    logger.debug("operator caches cleared")
