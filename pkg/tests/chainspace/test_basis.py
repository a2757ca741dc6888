from collections import Counter

import pytest

from graphcx.chainspace import (
    Caps,
    brute_force_basis,
    enumerate_basis,
    enumerate_excess_slice,
    trivalent_bound,
)
from graphcx.errors import CapacityError


@pytest.mark.parametrize(
    "vertices,loops,expected",
    [
        (2, 2, 1),
        (1, 2, 0),
        (3, 2, 0),
        (2, 3, 0),
        (3, 3, 1),
        (4, 3, 2),
        (5, 3, 0),
        (-1, 3, 0),
    ],
)
def test_connected_counts(vertices, loops, expected):
    assert len(enumerate_basis(vertices, loops)) == expected


def test_theta_slice(theta_class):
    basis = enumerate_basis(2, 2)
    assert basis.classes == (theta_class,)
    assert basis.index_of(theta_class) == 0
    assert theta_class in basis
    assert (basis.vertex_count, basis.loop_degree) == (2, 2)
    assert basis.connected
    assert not basis.by_edges


def test_slices_are_sorted_and_valid():
    for loops in (2, 3, 4):
        for vertices in range(1, trivalent_bound(loops) + 1):
            for connected in (True, False):
                basis = enumerate_basis(vertices, loops, connected)
                assert list(basis.classes) == sorted(basis.classes)
                for cls in basis:
                    assert cls.vertex_count == vertices
                    assert cls.loop_degree == loops
                    assert not cls.orientation_reversing
                    assert cls.is_connected or not connected
                    assert all(a != b for a, b in cls.edges)


@pytest.mark.parametrize(
    "vertices,loops",
    [(2, 2), (3, 3), (4, 3), (2, 4), (3, 4), (4, 4)],
)
def test_matches_brute_force(vertices, loops):
    assert enumerate_basis(vertices, loops) == brute_force_basis(vertices, loops)


@pytest.mark.parametrize("vertices,loops", [(4, 4), (3, 4)])
def test_disconnected_matches_brute_force(vertices, loops):
    products = enumerate_basis(vertices, loops, connected=False)
    oracle = brute_force_basis(vertices, loops, connected=False)
    assert products.classes == oracle.classes


def test_two_thetas_are_a_product(theta_class):
    products = enumerate_basis(4, 4, connected=False)
    (pair,) = [cls for cls in products if cls.component_count == 2]
    assert pair.components == (theta_class, theta_class)


def test_one_pi_filter():
    caps = Caps(max_loop_degree=5)
    everything = enumerate_basis(4, 5, caps=caps)
    one_pi = enumerate_basis(4, 5, one_pi=True, caps=caps)
    assert set(one_pi) == {cls for cls in everything if cls.is_1PI}
    assert len(one_pi) < len(everything)


def test_excess_slice(theta_class):
    basis = enumerate_excess_slice(2, 2)
    assert basis.by_edges
    assert basis.classes == (theta_class,)

    mixed = enumerate_excess_slice(4, 3)
    assert {cls.edge_count for cls in mixed} == {6}
    assert {cls.component_count for cls in mixed} == {1, 2}
    assert set(enumerate_basis(4, 3)) < set(mixed)
    assert enumerate_excess_slice(1, 1).classes == ()


def test_caps():
    caps = Caps(max_loop_degree=3, max_vertices=3)
    with pytest.raises(CapacityError):
        enumerate_basis(4, 3, caps=caps)
    with pytest.raises(CapacityError):
        enumerate_basis(2, 4, caps=caps)
    with pytest.raises(CapacityError):
        enumerate_basis(4, 3, caps=Caps(max_classes=1))
    assert enumerate_basis(7, 3, caps=caps).classes == ()


def test_brute_force_limits():
    with pytest.raises(CapacityError):
        brute_force_basis(6, 4)


def test_bridged_classes_vanish_below_five_loops():
    for loops in (2, 3, 4):
        for vertices in range(2, trivalent_bound(loops) + 1):
            assert all(cls.is_1PI for cls in enumerate_basis(vertices, loops))


def test_smallest_bridged_class():
    caps = Caps(max_loop_degree=5)
    (bridged,) = [cls for cls in enumerate_basis(4, 5, caps=caps) if cls.has_bridge]
    assert sorted(Counter(bridged.edges).values()) == [1, 3, 4]
    assert bridged.aut_order == 144
