import pytest

from graphcx.errors import StructureError
from graphcx.graphcore import (
    HalfEdgeStructure,
    LabelledOrientation,
    OrientedGraph,
    format_graph_text,
    parse_graph_text,
)


@pytest.mark.parametrize(
    "partner,attach,num_vertices",
    [
        ({0: 0}, {0: 0}, 1),
        ({0: 1, 1: 2, 2: 0}, {0: 0, 1: 0, 2: 0}, 1),
        ({0: 1, 1: 0}, {0: 0}, 1),
        ({0: 1, 1: 0}, {0: 0, 1: 0}, 2),
        ({0: 1, 1: 0}, {0: 0, 1: 3}, 2),
    ],
)
def test_structure_rejects_malformed(partner, attach, num_vertices):
    with pytest.raises(StructureError):
        HalfEdgeStructure(partner, attach, num_vertices)


def test_structure(theta):
    structure = theta.structure
    assert structure.half_edges == [0, 1, 2, 3, 4, 5]
    assert structure.edges() == [(0, 1), (2, 3), (4, 5)]
    assert structure.edge_count == 3
    assert structure.half_edges_at(0) == [0, 2, 4]
    assert structure.valence(1) == 3
    assert not structure.is_loop(0)
    assert structure == HalfEdgeStructure(structure.partner, structure.attach, 2)
    assert hash(structure) == hash(HalfEdgeStructure(structure.partner, structure.attach, 2))


def test_orientation_needs_one_arrow_per_edge(theta):
    with pytest.raises(StructureError):
        OrientedGraph(theta.structure, LabelledOrientation([0, 1], [0, 1, 2, 4]))
    with pytest.raises(StructureError):
        OrientedGraph(theta.structure, LabelledOrientation([0, 1], [0, 2]))
    with pytest.raises(StructureError):
        LabelledOrientation([0, 0], [])
    with pytest.raises(StructureError):
        OrientedGraph(theta.structure, LabelledOrientation([0, 1, 2], [0, 2, 4]))


def test_oriented_graph_helpers(theta):
    assert theta.number(1) == 1
    assert theta.initial(1) == 0
    assert theta.is_initial(0)
    assert theta.directed_edges() == [(0, 1), (0, 1), (0, 1)]

    swapped = theta.relabel([1, 0])
    assert swapped.directed_edges() == [(1, 0), (1, 0), (1, 0)]
    assert swapped.structure is theta.structure

    flipped = theta.flip(1)
    assert flipped.directed_edges() == [(1, 0), (0, 1), (0, 1)]
    assert flipped.flip(0) == theta


@pytest.mark.parametrize(
    "text,expected",
    [
        ("v=2 e=3\n1>2\n1>2\n2>1", "v=2 e=3\n1>2\n1>2\n2>1"),
        ("v=2 e=3 2>1 1>2 1>2", "v=2 e=3\n1>2\n1>2\n2>1"),
        ("v=1 e=1 1>1", "v=1 e=1\n1>1"),
        ("v=0 e=0", "v=0 e=0"),
    ],
)
def test_text_format(text, expected):
    assert parse_graph_text(text).to_text() == expected
    assert OrientedGraph.from_text(text) == parse_graph_text(text)


@pytest.mark.parametrize(
    "text",
    ["", "v=2", "e=1 v=2 1>2", "v=2 e=2 1>2", "v=2 e=1 1>3", "v=2 e=1 1-2"],
)
def test_text_format_errors(text):
    with pytest.raises(StructureError):
        parse_graph_text(text)


def test_format_graph_text():
    assert format_graph_text(2, [(0, 1), (1, 0)], " ") == "v=2 e=2 1>2 2>1"
