"""Enumeration of graph classes graded by vertices and loops."""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import TYPE_CHECKING, Callable, Optional

from graphcx.compat import cached_property
from graphcx.errors import CapacityError
from graphcx.graphcore import (
    EMPTY,
    GraphClass,
    OrientedGraph,
    canonicalize,
    disjoint_union,
    parse_graph_text,
)

from .store import slice_oid

if TYPE_CHECKING:
    from .store import BasisStore

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Caps:
    max_loop_degree: int = 4
    max_vertices: int = 6
    max_classes: int = 200_000

    def check(self, vertices: int, loops: int) -> None:
        if loops > self.max_loop_degree or vertices > self.max_vertices:
            raise CapacityError(
                f"slice (v={vertices}, b={loops}) is outside the caps "
                f"(v <= {self.max_vertices}, b <= {self.max_loop_degree})"
            )

    def guard(self, size: int, what: str = "slice") -> None:
        if size > self.max_classes:
            raise CapacityError(f"{what} of size {size} exceeds {self.max_classes}")


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class BasisSlice:
    """Sorted basis of one graded piece.

    With `by_edges` the piece is graded by excess: every monomial with
    `vertex_count` vertices and `vertex_count + loop_degree - 1` edges.
    """

    vertex_count: int
    loop_degree: int
    connected: bool
    one_pi: bool
    by_edges: bool
    classes: tuple[GraphClass, ...] = field(repr=False)

    @cached_property
    def _index(self) -> dict[GraphClass, int]:
        return {cls: i for i, cls in enumerate(self.classes)}

    def index_of(self, graph_class: GraphClass) -> Optional[int]:
        return self._index.get(graph_class)

    def __contains__(self, graph_class: object) -> bool:
        return graph_class in self._index

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[GraphClass]:
        return iter(self.classes)


def trivalent_bound(loops: int) -> int:
    """Largest vertex count of a loop-free graph of valence >= 3."""
    return max(2 * (loops - 1), 0)


def _multiplicity_matrices(degrees: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Loop-free multigraphs with the given degree sequence, as edge lists."""
    n = len(degrees)
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    remaining = list(degrees)
    chosen: list[tuple[int, int]] = []

    last: dict[int, int] = {}
    for idx, (i, j) in enumerate(cells):
        last[i] = last[j] = idx
    # rows whose sum must be exhausted once a cell is filled
    closes = [[k for k in range(n) if last.get(k) == idx] for idx in range(len(cells))]

    def fill(idx: int) -> Iterator[list[tuple[int, int]]]:
        if idx == len(cells):
            if not any(remaining):
                yield list(chosen)
            return
        i, j = cells[idx]
        for mult in range(min(remaining[i], remaining[j]) + 1):
            remaining[i] -= mult
            remaining[j] -= mult
            chosen.extend([(i, j)] * mult)
            if all(remaining[k] == 0 for k in closes[idx]):
                yield from fill(idx + 1)
            del chosen[len(chosen) - mult :]
            remaining[i] += mult
            remaining[j] += mult

    yield from fill(0)


def _degree_sequences(vertices: int, total: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing sequences of `vertices` integers >= 3 summing to `total`."""

    def extend(prefix: tuple[int, ...], left: int, cap: int):
        slots = vertices - len(prefix)
        if not slots:
            if not left:
                yield prefix
            return
        for d in range(min(cap, left - 3 * (slots - 1)), 2, -1):
            yield from extend((*prefix, d), left - d, d)

    yield from extend((), total, total)


@lru_cache(maxsize=None)
def _connected_classes(vertices: int, loops: int) -> tuple[GraphClass, ...]:
    if vertices < 2 or vertices > trivalent_bound(loops):
        return ()
    edges = vertices + loops - 1
    found: set[GraphClass] = set()
    for degrees in _degree_sequences(vertices, 2 * edges):
        for edge_list in _multiplicity_matrices(degrees):
            graph_class, sign = canonicalize(OrientedGraph.from_edges(vertices, edge_list))
            if sign and graph_class.is_connected:
                found.add(graph_class)
    logger.debug("connected slice v=%d b=%d: %d classes", vertices, loops, len(found))
    return tuple(sorted(found))


def _products(
    vertices: int, budget: int, measure: Callable[[GraphClass], int], max_loops: int
) -> list[GraphClass]:
    """Non-zero products of connected classes with the given total vertex
    count and total `measure`."""
    pool = [
        cls
        for loops in range(2, max_loops + 1)
        for v in range(2, min(vertices, trivalent_bound(loops)) + 1)
        for cls in _connected_classes(v, loops)
    ]
    pool.sort()
    found: set[GraphClass] = set()

    def extend(start: int, graph: Optional[OrientedGraph], left_v: int, left_m: int):
        if not left_v and not left_m:
            if graph is None:
                found.add(EMPTY)
                return
            graph_class, sign = canonicalize(graph)
            if sign:
                found.add(graph_class)
            return
        for idx in range(start, len(pool)):
            part = pool[idx]
            m = measure(part)
            if part.vertex_count > left_v or m > left_m:
                continue
            rep = part.representative()
            joined = rep if graph is None else disjoint_union(graph, rep)
            extend(idx, joined, left_v - part.vertex_count, left_m - m)

    extend(0, None, vertices, budget)
    return sorted(found)


def _from_codes(codes: Sequence[str]) -> tuple[GraphClass, ...]:
    return tuple(canonicalize(parse_graph_text(code))[0] for code in codes)


def _load(
    store: Optional["BasisStore"],
    oid: str,
    build: Callable[[], Sequence[GraphClass]],
    one_pi: bool,
) -> tuple[GraphClass, ...]:
    cached = store.get(oid) if store is not None else None
    if cached is not None:
        return _from_codes(cached)
    classes = tuple(build())
    if one_pi:
        classes = tuple(cls for cls in classes if not cls.has_bridge)
    if store is not None and not store.read_only:
        store.add(oid, (cls.compact_code for cls in classes))
    return classes


def _is_empty(vertices: int, loops: int) -> bool:
    return vertices < 1 or vertices > trivalent_bound(loops)


def enumerate_basis(
    vertices: int,
    loops: int,
    connected: bool = True,
    one_pi: bool = False,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> BasisSlice:
    """All non-zero classes with `vertices` vertices and first Betti number
    `loops`, valence >= 3 and no loops, sorted by canonical key.

    Slices past the trivalent bound are empty and skip the caps.
    """
    if _is_empty(vertices, loops):
        return BasisSlice(vertices, loops, connected, one_pi, False, ())
    caps.check(vertices, loops)

    def build() -> Sequence[GraphClass]:
        if connected:
            return _connected_classes(vertices, loops)
        return _products(vertices, loops, lambda cls: cls.loop_degree, loops)

    oid = slice_oid(kind="betti", v=vertices, b=loops, connected=connected, one_pi=one_pi)
    classes = _load(store, oid, build, one_pi)
    caps.guard(len(classes))
    return BasisSlice(vertices, loops, connected, one_pi, False, classes)


def enumerate_excess_slice(
    vertices: int,
    loops: int,
    one_pi: bool = False,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> BasisSlice:
    """Every monomial with `vertices` vertices and `vertices + loops - 1`
    edges, whatever its number of components."""
    if _is_empty(vertices, loops):
        return BasisSlice(vertices, loops, False, one_pi, True, ())
    caps.check(vertices, loops)

    def build() -> Sequence[GraphClass]:
        # a component with excess x has x + 1 loops
        return _products(vertices, loops - 1, lambda cls: cls.excess, loops)

    oid = slice_oid(kind="excess", v=vertices, b=loops, one_pi=one_pi)
    classes = _load(store, oid, build, one_pi)
    caps.guard(len(classes))
    return BasisSlice(vertices, loops, False, one_pi, True, classes)


def brute_force_basis(vertices: int, loops: int, connected: bool = True) -> BasisSlice:
    """Independent enumeration through every multiset of vertex pairs."""
    if vertices > 5 or loops > 4:
        raise CapacityError("brute force enumeration is limited to v <= 5, b <= 4")
    pairs = [(i, j) for i in range(vertices) for j in range(i + 1, vertices)]
    max_components = 1 if connected else max(vertices // 2, 1)
    found: set[GraphClass] = set()
    for components in range(1, max_components + 1):
        edges = vertices + loops - components
        if edges < 0:
            continue
        for edge_list in combinations_with_replacement(pairs, edges):
            valence = [0] * vertices
            for a, b in edge_list:
                valence[a] += 1
                valence[b] += 1
            if min(valence, default=3) < 3:
                continue
            graph_class, sign = canonicalize(OrientedGraph.from_edges(vertices, edge_list))
            if sign and graph_class.component_count == components:
                found.add(graph_class)
    return BasisSlice(vertices, loops, connected, False, False, tuple(sorted(found)))
