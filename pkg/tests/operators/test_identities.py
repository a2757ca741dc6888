import random
from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest

from graphcx.chainspace import Caps, Chain, enumerate_basis, monomial
from graphcx.errors import PreconditionError
from graphcx.graphcore import automorphism_order
from graphcx.operators import identities
from graphcx.operators import product as multiply

UNARY = [
    "d_squared",
    "anticommutation",
    "orientation_lemma",
    "coderivation",
    "cobracket_forms",
    "mu_theta",
    "delta_forms",
    "delta_squared",
    "alpha_homotopy",
    "delta1_homotopy",
    "cobracket_descent",
]
BINARY = [
    "expansion",
    "derivation",
    "bracket_defect",
    "bracket_symmetry",
    "cobracket_product",
    "duality",
    "product_duality",
    "compatibility",
    "closure",
    "mu1_homotopy",
    "bracket_descent",
]
TERNARY = ["jacobi", "gerstenhaber", "bv"]


@pytest.mark.parametrize("name", UNARY)
def test_unary(name, pool):
    check = getattr(identities, f"check_{name}")
    for x in pool:
        assert not check(x), x


@pytest.mark.parametrize(
    "name",
    ["d_squared", "anticommutation", "coderivation", "delta_forms", "alpha_homotopy"],
)
def test_unary_on_products(name, pool):
    check = getattr(identities, f"check_{name}")
    theta, c = pool[:2]
    for x in (multiply(theta, theta), multiply(theta, c)):
        assert not check(x), x


@pytest.mark.parametrize("name", BINARY)
def test_binary(name, pool):
    check = getattr(identities, f"check_{name}")
    for x, y in product(pool, repeat=2):
        assert not check(x, y), (x, y)


@pytest.mark.parametrize("name", TERNARY)
def test_ternary(name, pool):
    check = getattr(identities, f"check_{name}")
    for x, y, z in product(pool[:3], repeat=3):
        assert not check(x, y, z), (x, y, z)


def test_checks_hold_on_sums(pool):
    theta, c, a, b = pool
    x = a * 2 - b
    assert not identities.check_d_squared(x)
    assert not identities.check_bracket_descent(theta + theta * 2, x)


def test_duality_on_related_slices(loop3):
    (c,), trivalent = loop3
    for y in trivalent:
        assert identities.check_duality(monomial(c), monomial(y)) == Fraction(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_aut_powers(n, pool):
    for x in pool:
        assert identities.check_aut_powers(next(iter(x)), n) == 0


def test_power_of_theta(theta_class):
    assert automorphism_order(identities.power(theta_class, 2)) == 288


@pytest.mark.parametrize(
    "permutation,flips",
    [([0, 1], []), ([1, 0], []), ([1, 0], [0]), ([0, 1], [0, 2, 4])],
)
def test_relabelling(permutation, flips, theta_class):
    assert not identities.check_relabelling(theta_class, permutation, flips)


def test_relabelling_of_trivalent_classes(loop3):
    _, trivalent = loop3
    for graph_class in trivalent:
        assert not identities.check_relabelling(graph_class, [3, 1, 0, 2], [2, 6])


def test_expansion_needs_connected(pool):
    theta = pool[0]
    with pytest.raises(PreconditionError):
        identities.check_expansion(multiply(theta, theta), theta)


def test_closure_needs_one_pi(pool):
    caps = Caps(max_loop_degree=5)
    bridged = [cls for cls in enumerate_basis(4, 5, caps=caps) if cls.has_bridge]
    with pytest.raises(PreconditionError):
        identities.check_closure(monomial(bridged[0]), pool[0])


def test_degree():
    assert identities.degree(Chain()) == 0


def test_degree_rejects_mixed_parity(pool):
    theta, c = pool[:2]
    assert identities.degree(c) == 1
    with pytest.raises(PreconditionError):
        identities.degree(theta + c)


@pytest.mark.parametrize(
    "residual,expected",
    [(Chain(), 0), (Fraction(0), 0), (Fraction(1, 2), 1), (3, 1)],
)
def test_residual_terms(residual, expected):
    assert identities.residual_terms(residual) == expected


def test_residual_terms_counts_chain_terms(pool):
    assert identities.residual_terms(pool[2] + pool[3]) == 2


def test_no_incompatible_pair_without_bridges(pool):
    candidates = [next(iter(x)) for x in pool]
    assert identities.find_incompatible_pair(candidates) is None
    assert identities.find_incompatible_pair([]) is None


def test_incompatible_pair_search_order(mocker, pool):
    caps = Caps(max_loop_degree=5)
    bridged = [cls for cls in enumerate_basis(4, 5, caps=caps) if cls.has_bridge]
    theta = next(iter(pool[0]))
    residual = Chain({theta: 1})
    spy = mocker.patch.object(
        identities, "check_compatibility", return_value=residual
    )

    x, y, found = identities.find_incompatible_pair([theta, *bridged])

    assert (x, y) == (bridged[0], theta)
    assert found == residual
    spy.assert_called_once_with(Chain({x: 1}), Chain({y: 1}))


def test_pool_pairs_are_unordered_for_symmetry(pool):
    for x, y in combinations_with_replacement(pool, 2):
        assert not identities.check_bracket_symmetry(y, x)


def test_product_duality_on_powers(pool):
    theta, c = pool[:2]
    square = multiply(theta, theta)
    assert identities.check_product_duality(theta, theta) == 0
    assert identities.check_product_duality(square, theta) == 0
    assert identities.check_product_duality(square, square) == 0
    assert identities.check_product_duality(square, c) == 0


LOOP4 = [cls for v in range(3, 7) for cls in enumerate_basis(v, 4)]


@pytest.mark.parametrize("name", UNARY)
def test_unary_on_a_loop4_class(name):
    graph_class = random.Random(name).choice(LOOP4)
    check = getattr(identities, f"check_{name}")
    assert not check(monomial(graph_class)), graph_class


def test_bridgeless_pairs_are_compatible():
    classes = [
        cls
        for b in (2, 3, 4)
        for v in (2, 3)
        for cls in enumerate_basis(v, b)
        if cls.is_1PI
    ]
    assert len(classes) > 2
    for x, y in product(classes, repeat=2):
        if x.vertex_count + y.vertex_count <= 5:
            assert not identities.check_compatibility(monomial(x), monomial(y)), (x, y)
