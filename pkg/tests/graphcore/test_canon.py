from collections import Counter
from itertools import combinations, permutations
from math import factorial, prod

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms import isomorphism

from graphcx.chainspace import enumerate_basis
from graphcx.graphcore import (
    EMPTY,
    OrientedGraph,
    automorphism_order,
    canonical_form,
    canonicalize,
    disjoint_union,
    permutation_sign,
)
from graphcx.graphcore.canon import cache_info
from graphcx.graphcore.connectivity import to_networkx

LOOP3 = (*enumerate_basis(3, 3), *enumerate_basis(4, 3))


def test_theta(theta):
    graph_class, sign = canonicalize(theta)
    assert sign in (1, -1)
    assert graph_class.aut_order == 12
    assert automorphism_order(theta) == 12
    assert not graph_class.orientation_reversing
    assert graph_class.loop_degree == 2
    assert graph_class.excess == 1
    assert graph_class.is_1PI
    assert graph_class.canonical_code == b"v=2 e=3\n1>2\n1>2\n1>2"
    assert graph_class.compact_code == "v=2 e=3 1>2 1>2 1>2"
    assert graph_class.representative() == theta
    assert repr(graph_class) == "GraphClass('v=2 e=3 1>2 1>2 1>2')"


def test_two_thetas(theta):
    graph_class, sign = canonicalize(disjoint_union(theta, theta))
    assert sign
    assert graph_class.aut_order == 288
    assert graph_class.component_count == 2
    assert graph_class.components == (canonicalize(theta)[0],) * 2
    assert graph_class.loop_degree == 4
    assert not graph_class.is_1PI


@pytest.mark.parametrize(
    "num_vertices,edges",
    [
        (1, [(0, 0), (0, 0)]),
        (2, [(0, 1), (0, 1), (0, 0)]),
        (2, [(0, 1)] * 4),
    ],
)
def test_zero_graphs(num_vertices, edges):
    graph_class, sign = canonicalize(OrientedGraph.from_edges(num_vertices, edges))
    assert sign == 0
    assert graph_class.orientation_reversing


def test_four_parallel_edges():
    graph = OrientedGraph.from_edges(2, [(0, 1)] * 4)
    assert automorphism_order(graph) == 2 * 24


def test_repeated_odd_component_is_reversing():
    (odd,) = enumerate_basis(3, 3)
    graph = disjoint_union(odd.representative(), odd.representative())
    graph_class, sign = canonicalize(graph)
    assert sign == 0
    assert graph_class.orientation_reversing


def test_empty():
    assert canonicalize(OrientedGraph.from_edges(0, []))[0] is EMPTY
    assert EMPTY.aut_order == 1
    assert EMPTY.component_count == 0
    assert EMPTY.loop_degree == 0


@pytest.mark.parametrize(
    "perm,expected",
    [((0, 1, 2), 1), ((1, 0, 2), -1), ((1, 2, 0), 1), ((2, 1, 0), -1), ((), 1)],
)
def test_permutation_sign(perm, expected):
    assert permutation_sign(perm) == expected


def test_canonical_numbering(theta):
    form = canonical_form(theta.relabel([1, 0]))
    assert sorted(form.numbering) == [0, 1]
    assert form.sign == -canonicalize(theta)[1]


@pytest.mark.parametrize("graph_class", LOOP3, ids=lambda cls: cls.compact_code)
def test_every_numbering_gives_the_same_class(graph_class):
    graph = graph_class.representative()
    for perm in permutations(range(graph.num_vertices)):
        relabelled, sign = canonicalize(graph.relabel(perm))
        assert relabelled == graph_class
        assert sign == permutation_sign(perm)


@given(data=st.data())
def test_relabelling_and_flips(data):
    graph_class = data.draw(st.sampled_from(LOOP3))
    graph = graph_class.representative()
    perm = data.draw(st.permutations(range(graph.num_vertices)))
    flips = data.draw(
        st.sets(st.sampled_from([h for h, _ in graph.structure.edges()]))
    )
    relabelled, sign = canonicalize(graph.relabel(perm).flip(*flips))
    assert relabelled == graph_class
    assert sign == permutation_sign(perm) * (-1) ** len(flips)


def test_ordering_and_hashing(loop3):
    (c,), (a, b) = loop3
    assert c < a < b
    assert len({a, b, c, a}) == 3
    assert sorted([b, c, a]) == [c, a, b]


LOOP4 = tuple(cls for v in range(3, 7) for cls in enumerate_basis(v, 4))


@given(data=st.data())
def test_loop4_relabelling(data):
    graph_class = data.draw(st.sampled_from(LOOP4))
    graph = graph_class.representative()
    perm = data.draw(st.permutations(range(graph.num_vertices)))
    relabelled, sign = canonicalize(graph.relabel(perm))
    assert relabelled == graph_class
    assert sign == permutation_sign(perm)


@pytest.mark.parametrize("vertices", [3, 4, 5, 6])
def test_slice_classes_are_pairwise_non_isomorphic(vertices):
    graphs = [to_networkx(cls.representative()) for cls in enumerate_basis(vertices, 4)]
    for g, h in combinations(graphs, 2):
        assert not nx.is_isomorphic(g, h)


def test_k4_automorphisms():
    k4 = OrientedGraph.from_edges(4, list(combinations(range(4), 2)))
    assert canonicalize(k4)[0].aut_order == 24
    assert automorphism_order(k4) == 24


def test_canonical_class_is_computed_once(theta):
    canonicalize(theta)
    before = cache_info()["classes"]
    canonicalize(theta.relabel([1, 0]).flip(0))
    assert cache_info()["classes"] == before


@pytest.mark.parametrize("graph_class", LOOP4, ids=lambda cls: cls.compact_code)
def test_aut_order_matches_networkx(graph_class):
    graph = nx.Graph()
    graph.add_nodes_from(range(graph_class.vertex_count))
    multiplicity = Counter(graph_class.edges)
    for (a, b), mult in multiplicity.items():
        graph.add_edge(a, b, mult=mult)
    matcher = isomorphism.GraphMatcher(
        graph, graph, edge_match=isomorphism.categorical_edge_match("mult", 0)
    )
    vertex_maps = sum(1 for _ in matcher.isomorphisms_iter())
    expected = vertex_maps * prod(factorial(m) for m in multiplicity.values())
    assert graph_class.aut_order == expected
