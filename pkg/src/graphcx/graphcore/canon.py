"""Canonical forms, automorphism groups and orientation signs."""

import logging
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple, Optional, Union

from sympy.combinatorics import Permutation, PermutationGroup

from graphcx.compat import cached_property

from . import connectivity
from .structure import HalfEdgeStructure, OrientedGraph, format_graph_text

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class GraphClass:
    """Isomorphism class of an oriented graph, up to orientation sign.

    `edges` is the sorted undirected edge list (lower number first) under
    the canonical numbering. The reference orientation numbers vertices
    canonically and points every edge from its lower to its higher number.
    """

    def __init__(
        self,
        vertex_count: int,
        edges: tuple[Edge, ...],
        aut_order: int,
        orientation_reversing: bool,
        components: Optional[tuple["GraphClass", ...]] = None,
    ):
        self.vertex_count = vertex_count
        self.edges = tuple(edges)
        self.aut_order = aut_order
        self.orientation_reversing = orientation_reversing
        self._components = components
        self.key = (vertex_count, len(self.edges), self.edges)
        self._hash = hash(self.key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def components(self) -> tuple["GraphClass", ...]:
        if self._components is not None:
            return self._components
        return (self,)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    @property
    def loop_degree(self) -> int:
        return self.edge_count - self.vertex_count + self.component_count

    @property
    def excess(self) -> int:
        return self.edge_count - self.vertex_count

    @cached_property
    def canonical_code(self) -> bytes:
        return format_graph_text(self.vertex_count, self.edges).encode()

    @cached_property
    def compact_code(self) -> str:
        return format_graph_text(self.vertex_count, self.edges, " ")

    def representative(self) -> OrientedGraph:
        """The class with its reference orientation, vertex ids = numbers."""
        return OrientedGraph.from_edges(self.vertex_count, self.edges)

    @cached_property
    def has_bridge(self) -> bool:
        return connectivity.has_bridge(self.representative())

    @cached_property
    def is_1PI(self) -> bool:  # noqa: N802
        return self.is_connected and not self.has_bridge

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphClass) and self.key == other.key

    def __lt__(self, other: "GraphClass") -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.compact_code!r})"


EMPTY = GraphClass(0, (), 1, False, components=())


class CanonicalForm(NamedTuple):
    graph_class: GraphClass
    sign: int
    # numbering[i] is the canonical number of the vertex numbered i
    numbering: tuple[int, ...]


class _Labelling(NamedTuple):
    code: tuple[Edge, ...]
    order: tuple[int, ...]
    graph_class: GraphClass


def permutation_sign(perm) -> int:
    if len(perm) < 2:
        return 1
    return Permutation(list(perm)).signature()


def _automorphism_sign(perm, code: tuple[Edge, ...]) -> int:
    """Sign by which a vertex automorphism acts on the reference orientation."""
    flips = sum(1 for a, b in code if perm[a] > perm[b])
    return permutation_sign(perm) * (-1) ** flips


def _refine(cells: list[list[int]], neighbours) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable.

    A signature lists (-cell, count) over the cells a vertex touches, which
    orders like the dense vector of counts per cell.
    """
    while True:
        index = {v: i for i, cell in enumerate(cells) for v in cell}
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {}
            for v in cell:
                counts: Counter[int] = Counter()
                for w, mult in neighbours[v]:
                    counts[index[w]] += mult
                signature[v] = tuple((-i, n) for i, n in sorted(counts.items()))
            for sig in sorted(set(signature.values())):
                refined.append([v for v in cell if signature[v] == sig])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _orbit(seeds: list[int], generators: list[tuple[int, ...]]) -> set[int]:
    orbit = set(seeds)
    frontier = list(seeds)
    while frontier:
        v = frontier.pop()
        for g in generators:
            if g[v] not in orbit:
                orbit.add(g[v])
                frontier.append(g[v])
    return orbit


_CLASSES: dict[tuple[int, tuple[Edge, ...]], GraphClass] = {}


def _component_class(
    size: int, code: tuple[Edge, ...], generators: list[tuple[int, ...]]
) -> GraphClass:
    """Class of a connected canonical code; `generators` generate its vertex
    automorphisms in canonical numbering."""
    key = (size, code)
    if key in _CLASSES:
        return _CLASSES[key]
    loops = Counter(a for a, b in code if a == b)
    reversing = bool(loops) or any(
        _automorphism_sign(perm, code) < 0 for perm in generators
    )
    group_order = 1
    if generators:
        group_order = PermutationGroup([Permutation(list(g)) for g in generators]).order()
    parallel = Counter(code)
    aut_order = (
        group_order
        * prod(factorial(m) for (a, b), m in parallel.items() if a != b)
        * prod(factorial(m) * 2**m for m in loops.values())
    )
    return _CLASSES.setdefault(key, GraphClass(size, code, aut_order, reversing))


def _leaf_code(order: tuple[int, ...], edges: tuple[Edge, ...]) -> tuple[Edge, ...]:
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    return tuple(
        sorted(
            (min(position[a], position[b]), max(position[a], position[b]))
            for a, b in edges
        )
    )


@lru_cache(maxsize=1 << 14)
def _label_component(size: int, edges: tuple[Edge, ...]) -> _Labelling:
    """Canonically label one connected component given by undirected edges.

    Depth-first individualization over refined partitions; a branch is
    skipped when an automorphism found so far, fixing the individualized
    vertices, maps it onto an explored sibling. The automorphisms found
    between leaves of equal code generate the vertex automorphism group.
    """
    neighbours: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for (a, b), mult in Counter(edges).items():
        neighbours[a].append((b, mult))
        if a != b:
            neighbours[b].append((a, mult))

    best_code: Optional[tuple[Edge, ...]] = None
    best_order: tuple[int, ...] = ()
    automorphisms: list[tuple[int, ...]] = []

    def visit(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        nonlocal best_code, best_order
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = tuple(cell[0] for cell in cells)
            code = _leaf_code(order, edges)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                perm = [0] * size
                for v, w in zip(best_order, order):
                    perm[v] = w
                automorphisms.append(tuple(perm))
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored:
                fixing = [g for g in automorphisms if all(g[p] == p for p in prefix)]
                if v in _orbit(explored, fixing):
                    continue
            explored.append(v)
            split = [[v], [w for w in cell if w != v]]
            visit(
                _refine(cells[:target] + split + cells[target + 1 :], neighbours),
                (*prefix, v),
            )

    visit(_refine([list(range(size))], neighbours), ())
    assert best_code is not None
    position = [0] * size
    for i, v in enumerate(best_order):
        position[v] = i
    generators = [
        tuple(position[g[v]] for v in best_order) for g in automorphisms
    ]
    graph_class = _component_class(size, best_code, generators)
    return _Labelling(best_code, best_order, graph_class)


@lru_cache(maxsize=1 << 16)
def _canonical_form(num_vertices: int, edges: tuple[Edge, ...]) -> CanonicalForm:
    if not num_vertices:
        return CanonicalForm(EMPTY, 1, ())

    blocks = []
    for vertices in connectivity.vertex_components(num_vertices, edges):
        local = sorted(vertices)
        index = {v: i for i, v in enumerate(local)}
        local_edges = tuple(
            sorted(
                (min(index[a], index[b]), max(index[a], index[b]))
                for a, b in edges
                if a in vertices
            )
        )
        labelling = _label_component(len(local), local_edges)
        blocks.append((labelling.graph_class.key, local, labelling))
    blocks.sort(key=lambda block: (block[0], block[1][0]))

    numbering = [0] * num_vertices
    all_edges: list[Edge] = []
    parts = []
    offset = 0
    for _, local, labelling in blocks:
        for position, local_vertex in enumerate(labelling.order):
            numbering[local[local_vertex]] = offset + position
        all_edges.extend((a + offset, b + offset) for a, b in labelling.code)
        parts.append(labelling.graph_class)
        offset += len(local)

    repeated = Counter(parts)
    reversing = any(part.orientation_reversing for part in parts) or any(
        mult > 1 and part.vertex_count % 2 for part, mult in repeated.items()
    )
    aut_order = prod(part.aut_order for part in parts) * prod(
        factorial(mult) for mult in repeated.values()
    )
    if len(parts) == 1:
        graph_class = parts[0]
    else:
        graph_class = GraphClass(
            num_vertices, tuple(all_edges), aut_order, reversing, tuple(parts)
        )

    if reversing:
        sign = 0
    else:
        flips = sum(1 for tail, head in edges if numbering[tail] > numbering[head])
        sign = permutation_sign(numbering) * (-1) ** flips
    return CanonicalForm(graph_class, sign, tuple(numbering))


def canonical_form(graph: OrientedGraph) -> CanonicalForm:
    """Canonical class, orientation sign and the numbering that realises it."""
    return _canonical_form(graph.num_vertices, tuple(sorted(graph.directed_edges())))


def canonicalize(graph: OrientedGraph) -> tuple[GraphClass, int]:
    """Return the class of `graph` and the sign relating the two orientations.

    The sign is 0 exactly when the graph equals minus itself, that is when
    it has a loop or an orientation reversing automorphism.
    """
    form = canonical_form(graph)
    return form.graph_class, form.sign


def automorphism_order(graph: Union[HalfEdgeStructure, OrientedGraph]) -> int:
    """Order of the automorphism group acting on half-edges."""
    structure = graph.structure if isinstance(graph, OrientedGraph) else graph
    attach = structure.attach
    edges = tuple(sorted((attach[h], attach[other]) for h, other in structure.edges()))
    return _canonical_form(structure.num_vertices, edges).graph_class.aut_order


def cache_info() -> dict[str, object]:
    return {
        "classes": len(_CLASSES),
        "components": _label_component.cache_info(),
        "graphs": _canonical_form.cache_info(),
    }
