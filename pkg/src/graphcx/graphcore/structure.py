"""Half-edge multigraphs and their labelled orientations."""

import re
from collections.abc import Iterable, Mapping, Sequence
from types import MappingProxyType

from graphcx.errors import StructureError

_HEADER_RE = re.compile(r"v=(\d+)")
_COUNT_RE = re.compile(r"e=(\d+)")
_EDGE_RE = re.compile(r"(\d+)>(\d+)")


class HalfEdgeStructure:
    """A multigraph given by half-edges.

    `partner` pairs every half-edge h with the other end h̄ of its edge and
    `attach` sends a half-edge to the vertex it begins at. Vertices are
    `range(num_vertices)`.
    """

    __slots__ = ("_attach", "_partner", "num_vertices")

    def __init__(
        self,
        partner: Mapping[int, int],
        attach: Mapping[int, int],
        num_vertices: int,
    ):
        partner = dict(partner)
        attach = dict(attach)
        if num_vertices < 0:
            raise StructureError(f"negative vertex count {num_vertices}")
        if partner.keys() != attach.keys():
            raise StructureError("partner and attach disagree on the half-edges")
        for h, other in partner.items():
            if other == h or partner.get(other) != h:
                raise StructureError(
                    f"partner is not a fixed-point-free involution at {h}"
                )
        used = set(attach.values())
        if not used <= set(range(num_vertices)):
            raise StructureError(f"attach leaves range({num_vertices})")
        if len(used) != num_vertices:
            raise StructureError("every vertex needs at least one half-edge")
        self._partner = partner
        self._attach = attach
        self.num_vertices = num_vertices

    @property
    def partner(self) -> Mapping[int, int]:
        return MappingProxyType(self._partner)

    @property
    def attach(self) -> Mapping[int, int]:
        return MappingProxyType(self._attach)

    @property
    def half_edges(self) -> list[int]:
        return sorted(self._partner)

    @property
    def edge_count(self) -> int:
        return len(self._partner) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(h, other) for h, other in sorted(self._partner.items()) if h < other]

    def half_edges_at(self, vertex: int) -> list[int]:
        return sorted(h for h, v in self._attach.items() if v == vertex)

    def valence(self, vertex: int) -> int:
        return sum(1 for v in self._attach.values() if v == vertex)

    def is_loop(self, h: int) -> bool:
        return self._attach[h] == self._attach[self._partner[h]]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HalfEdgeStructure) and (
            self.num_vertices == other.num_vertices
            and self._partner == other._partner
            and self._attach == other._attach
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.num_vertices,
                frozenset(self._partner.items()),
                frozenset(self._attach.items()),
            )
        )

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(partner={self._partner!r}, "
            f"attach={self._attach!r}, num_vertices={self.num_vertices!r})"
        )


class LabelledOrientation:
    """A vertex numbering together with one initial half-edge per edge."""

    __slots__ = ("arrows", "vertex_order")

    def __init__(self, vertex_order: Sequence[int], arrows: Iterable[int]):
        self.vertex_order = tuple(vertex_order)
        self.arrows = frozenset(arrows)
        if sorted(self.vertex_order) != list(range(len(self.vertex_order))):
            raise StructureError(f"vertex order {self.vertex_order} is not a bijection")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabelledOrientation) and (
            self.vertex_order == other.vertex_order and self.arrows == other.arrows
        )

    def __hash__(self) -> int:
        return hash((self.vertex_order, self.arrows))

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}(vertex_order={self.vertex_order!r}, "
            f"arrows={sorted(self.arrows)!r})"
        )


class OrientedGraph:
    """A labelled oriented graph: structure plus labelled orientation."""

    __slots__ = ("orientation", "structure")

    def __init__(self, structure: HalfEdgeStructure, orientation: LabelledOrientation):
        if len(orientation.vertex_order) != structure.num_vertices:
            raise StructureError("vertex order does not match the vertex count")
        if not orientation.arrows <= structure.partner.keys():
            raise StructureError("arrow on an unknown half-edge")
        for h, other in structure.edges():
            if (h in orientation.arrows) == (other in orientation.arrows):
                raise StructureError(f"edge {{{h}, {other}}} needs exactly one arrow")
        self.structure = structure
        self.orientation = orientation

    @classmethod
    def from_edges(
        cls, num_vertices: int, edges: Iterable[tuple[int, int]]
    ) -> "OrientedGraph":
        """Build the graph with identity numbering from directed edges.

        Edge i becomes half-edges 2i (tail, initial) and 2i + 1 (head).
        """
        partner: dict[int, int] = {}
        attach: dict[int, int] = {}
        for i, (tail, head) in enumerate(edges):
            partner[2 * i], partner[2 * i + 1] = 2 * i + 1, 2 * i
            attach[2 * i], attach[2 * i + 1] = tail, head
        structure = HalfEdgeStructure(partner, attach, num_vertices)
        arrows = [h for h in partner if h % 2 == 0]
        return cls(structure, LabelledOrientation(range(num_vertices), arrows))

    @classmethod
    def from_text(cls, text: str) -> "OrientedGraph":
        return parse_graph_text(text)

    @property
    def num_vertices(self) -> int:
        return self.structure.num_vertices

    def partner(self, h: int) -> int:
        return self.structure.partner[h]

    def vertex(self, h: int) -> int:
        return self.structure.attach[h]

    def number(self, h: int) -> int:
        """Number of the vertex at which `h` begins."""
        return self.orientation.vertex_order[self.structure.attach[h]]

    def is_initial(self, h: int) -> bool:
        return h in self.orientation.arrows

    def initial(self, h: int) -> int:
        return h if h in self.orientation.arrows else self.structure.partner[h]

    def directed_edges(self) -> list[tuple[int, int]]:
        """(tail number, head number) for every edge."""
        result = []
        for h, _ in self.structure.edges():
            tail = self.initial(h)
            result.append((self.number(tail), self.number(self.partner(tail))))
        return result

    def relabel(self, permutation: Sequence[int]) -> "OrientedGraph":
        """Renumber: the vertex numbered i gets number permutation[i]."""
        order = [permutation[i] for i in self.orientation.vertex_order]
        return OrientedGraph(
            self.structure, LabelledOrientation(order, self.orientation.arrows)
        )

    def flip(self, *half_edges: int) -> "OrientedGraph":
        """Reverse the arrows on the edges of the given half-edges."""
        arrows = set(self.orientation.arrows)
        for h in half_edges:
            initial = self.initial(h)
            arrows.symmetric_difference_update({initial, self.partner(initial)})
        return OrientedGraph(
            self.structure,
            LabelledOrientation(self.orientation.vertex_order, arrows),
        )

    def to_text(self, sep: str = "\n") -> str:
        return format_graph_text(self.num_vertices, sorted(self.directed_edges()), sep)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrientedGraph) and (
            self.structure == other.structure and self.orientation == other.orientation
        )

    def __hash__(self) -> int:
        return hash((self.structure, self.orientation))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}.from_text({self.to_text(' ')!r})"


def format_graph_text(
    num_vertices: int, edges: Sequence[tuple[int, int]], sep: str = "\n"
) -> str:
    lines = [f"v={num_vertices} e={len(edges)}"]
    lines.extend(f"{tail + 1}>{head + 1}" for tail, head in edges)
    return sep.join(lines)


def parse_graph_text(text: str) -> OrientedGraph:
    """Parse `v=<n> e=<m>` followed by `a>b` edges (1-based, tail first)."""
    tokens = text.split()
    if len(tokens) < 2:
        raise StructureError(f"missing header in {text!r}")
    header, count = _HEADER_RE.fullmatch(tokens[0]), _COUNT_RE.fullmatch(tokens[1])
    if header is None or count is None:
        raise StructureError(f"bad header {' '.join(tokens[:2])!r}")
    num_vertices, num_edges = int(header.group(1)), int(count.group(1))
    if len(tokens) - 2 != num_edges:
        raise StructureError(f"expected {num_edges} edges, got {len(tokens) - 2}")
    edges = []
    for token in tokens[2:]:
        match = _EDGE_RE.fullmatch(token)
        if match is None:
            raise StructureError(f"bad edge {token!r}")
        tail, head = int(match.group(1)) - 1, int(match.group(2)) - 1
        if not (0 <= tail < num_vertices and 0 <= head < num_vertices):
            raise StructureError(f"edge {token!r} leaves 1..{num_vertices}")
        edges.append((tail, head))
    return OrientedGraph.from_edges(num_vertices, edges)
