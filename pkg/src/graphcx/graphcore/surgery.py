"""Raw surgeries on labelled oriented graphs.

Every surgery returns its output with vertex ids equal to vertex numbers.
Half-edge ids survive; only the half-edges of a contracted edge vanish.
"""

from collections.abc import Collection, Mapping
from typing import Optional

from graphcx.errors import PreconditionError

from .structure import HalfEdgeStructure, LabelledOrientation, OrientedGraph

Term = tuple[int, OrientedGraph]


def _build(
    partner: Mapping[int, int],
    numbers: Mapping[int, int],
    num_vertices: int,
    arrows: Collection[int],
) -> OrientedGraph:
    structure = HalfEdgeStructure(partner, numbers, num_vertices)
    return OrientedGraph(structure, LabelledOrientation(range(num_vertices), arrows))


def _numbers(graph: OrientedGraph) -> dict[int, int]:
    return {h: graph.number(h) for h in graph.structure.partner}


def _check_half_edge(graph: OrientedGraph, *half_edges: int) -> None:
    for h in half_edges:
        if h not in graph.structure.partner:
            raise PreconditionError(f"{h} is not a half-edge of {graph!r}")


def contract_edge(graph: OrientedGraph, h: int) -> Term:
    """Collapse the edge of `h`.

    With the arrow from number i to number j and i < j the merged vertex
    keeps i, numbers above j move down by one and the sign is (-1)^(j+1).
    A reversed arrow is flipped first at the cost of -1.
    """
    _check_half_edge(graph, h)
    if graph.structure.is_loop(h):
        raise PreconditionError(f"cannot contract the loop at half-edge {h}")
    tail = graph.initial(h)
    head = graph.partner(tail)
    a, b = graph.number(tail), graph.number(head)
    sign = (-1) ** (b + 1) if a < b else (-1) ** a
    low, high = min(a, b), max(a, b)

    def renumber(x: int) -> int:
        if x == high:
            return low
        return x - 1 if x > high else x

    partner = {
        x: y for x, y in graph.structure.partner.items() if x not in (tail, head)
    }
    numbers = {x: renumber(graph.number(x)) for x in partner}
    arrows = graph.orientation.arrows - {tail, head}
    return sign, _build(partner, numbers, graph.num_vertices - 1, arrows)


def cut_paste(graph: OrientedGraph, h: int, k: int) -> Term:
    """Cut the edges of h and k and re-glue them as h-k and h̄-k̄.

    The new edges run from h to k and from k̄ to h̄; arrows that had to be
    flipped to make h initial and k terminal contribute to the sign.
    """
    _check_half_edge(graph, h, k)
    if h == k:
        raise PreconditionError(f"cannot glue half-edge {h} to itself")
    partner = dict(graph.structure.partner)
    h_bar, k_bar = partner[h], partner[k]
    if k == h_bar:
        sign = 1
        arrows = graph.orientation.arrows
    else:
        sign = (1 if graph.is_initial(h) else -1) * (1 if graph.is_initial(k_bar) else -1)
        arrows = (graph.orientation.arrows - {h, h_bar, k, k_bar}) | {h, k_bar}
        partner[h], partner[k] = k, h
        partner[h_bar], partner[k_bar] = k_bar, h_bar
    return sign, _build(partner, _numbers(graph), graph.num_vertices, arrows)


def contract_half_pair(graph: OrientedGraph, h: int, k: int) -> Optional[Term]:
    """Glue h to k and collapse the new edge; None when both sit at one vertex."""
    _check_half_edge(graph, h, k)
    if h == k or k == graph.partner(h):
        raise PreconditionError(f"half-edges {h} and {k} are not an admissible pair")
    if graph.vertex(h) == graph.vertex(k):
        return None
    glue_sign, glued = cut_paste(graph, h, k)
    contract_sign, contracted = contract_edge(glued, h)
    return glue_sign * contract_sign, contracted


def expand_vertex(
    graph: OrientedGraph, v: int, part: Collection[int]
) -> tuple[OrientedGraph, int, int]:
    """Split vertex `v`: `part` stays, the rest moves to a new last vertex.

    Returns the expanded graph and the new half-edges p (at v) and p̄ (at
    the new vertex). The arrow is placed so that contracting the new edge
    gives back `graph` with sign +1.
    """
    at_v = set(graph.structure.half_edges_at(v))
    part = set(part)
    if not part <= at_v:
        raise PreconditionError(f"{sorted(part - at_v)} do not sit at vertex {v}")
    n = graph.num_vertices
    p = max(graph.structure.partner) + 1
    p_bar = p + 1
    partner = dict(graph.structure.partner)
    partner[p], partner[p_bar] = p_bar, p
    numbers = _numbers(graph)
    for x in at_v - part:
        numbers[x] = n
    numbers[p], numbers[p_bar] = graph.orientation.vertex_order[v], n
    arrows = graph.orientation.arrows | {p if n % 2 else p_bar}
    return _build(partner, numbers, n + 1, arrows), p, p_bar


def expand_vertex_and_glue(
    graph: OrientedGraph, v: int, part: Collection[int], h: int
) -> Optional[Term]:
    """Expand `v` along `part` and glue the new half-edge p to `h`."""
    _check_half_edge(graph, h)
    at_v = set(graph.structure.half_edges_at(v))
    part = set(part)
    if not part or part == at_v or not part <= at_v:
        raise PreconditionError(f"{sorted(part)} is not a proper part of vertex {v}")
    if len(part) < 2 or len(at_v) - len(part) < 2:
        return None
    expanded, p, _ = expand_vertex(graph, v, part)
    return cut_paste(expanded, p, h)


def disjoint_union(x: OrientedGraph, y: OrientedGraph) -> OrientedGraph:
    """The product at graph level: y is numbered after x."""
    shift = max(x.structure.partner, default=-1) + 1
    n = x.num_vertices
    partner = dict(x.structure.partner)
    numbers = _numbers(x)
    for h, other in y.structure.partner.items():
        partner[h + shift] = other + shift
        numbers[h + shift] = y.number(h) + n
    arrows = x.orientation.arrows | {h + shift for h in y.orientation.arrows}
    return _build(partner, numbers, n + y.num_vertices, arrows)
