import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcx.chainspace import Caps, Chain, SymChain, monomial
from graphcx.errors import CapacityError, PreconditionError, VerificationError
from graphcx.homology import (
    HomologyRow,
    betti,
    boundary_matrix,
    check_cycle_triviality,
    check_triviality,
    cycle_basis,
    cycle_pairs,
    euler_characteristic,
    homology_table,
    is_boundary,
    kernel_basis,
    matrix_rank,
    rank,
)
from graphcx.operators import boundary_E, boundary_H, bracket, cobracket, delta1
from graphcx.operators.algebra import sym_map


@pytest.mark.parametrize(
    "loops,vertices,expected",
    [(2, 2, 1), (3, 2, 0), (3, 3, 0), (3, 4, 1)],
)
def test_betti(loops, vertices, expected):
    assert betti(loops, vertices) == expected


def test_betti_in_parallel():
    assert betti(3, 4, jobs=4) == 1


def test_betti_checks_its_ranks(mocker):
    mocker.patch("graphcx.homology.linalg.modular_rank", return_value=0)
    with pytest.raises(VerificationError):
        betti(3, 4)


def test_homology_table():
    assert homology_table([3, 2]) == [
        HomologyRow(2, 2, 1, 1),
        HomologyRow(3, 4, 2, 1),
        HomologyRow(3, 3, 1, 0),
    ]


def test_homology_table_needs_the_slice_above():
    with pytest.raises(CapacityError):
        homology_table([3], Caps(max_vertices=3))


def test_kernel_basis(loop3):
    _, trivalent = loop3
    (cycle,) = kernel_basis("E", 3, 4)
    assert set(cycle) == set(trivalent)
    assert sorted(abs(c) for c in cycle.values()) == [1, 3]
    assert cycle.items_sorted()[0][1] > 0
    assert boundary_E(cycle) == Chain()


def test_kernel_of_empty_codomain(loop3):
    (c,), _ = loop3
    assert kernel_basis("E", 3, 3) == [monomial(c)]
    assert kernel_basis("E", 2, 3) == []


@pytest.mark.parametrize("loops", [2, 3])
def test_euler_characteristic(loops):
    assert euler_characteristic(loops) == (1, 1)


def test_theta_is_not_a_boundary(theta_class):
    assert is_boundary(monomial(theta_class)) is None


def test_c_is_a_boundary(loop3):
    (c,), trivalent = loop3
    preimage = is_boundary(monomial(c, 4))
    assert preimage is not None
    assert set(preimage) <= set(trivalent)
    assert boundary_E(preimage) == monomial(c, 4)


def test_zero_is_a_boundary():
    assert is_boundary(Chain()) == Chain()


def test_is_boundary_verifies_preimage(mocker, loop3):
    (c,), _ = loop3
    mocker.patch("graphcx.homology.cycles.boundary_E", return_value=Chain())
    with pytest.raises(VerificationError):
        is_boundary(monomial(c))


def test_triviality_of_theta(theta_class):
    theta = monomial(theta_class)
    assert check_triviality(theta, theta) == Chain()


def test_triviality_needs_cycles(theta_class, loop3):
    _, (a, _) = loop3
    with pytest.raises(PreconditionError):
        check_triviality(monomial(theta_class), monomial(a))
    with pytest.raises(PreconditionError):
        check_cycle_triviality(monomial(a))


def test_cycle_pairs(theta_class, loop3):
    theta = monomial(theta_class)
    (c,), _ = loop3
    (z,) = kernel_basis("E", 3, 4)
    assert cycle_pairs() == [(theta, theta), (theta, monomial(c)), (theta, z)]
    assert cycle_pairs(Caps(max_loop_degree=3)) == [(theta, theta)]


def test_cycle_basis(theta_class):
    cycles = cycle_basis(Caps(max_loop_degree=3))
    assert cycles[0] == monomial(theta_class)
    assert [len(z) for z in cycles] == [1, 1, 2]


def test_trivalent_cycle_is_trivial(loop3):
    (c,), _ = loop3
    (z,) = kernel_basis("E", 3, 4)
    image = boundary_H(z)
    assert set(image) == {c}
    assert abs(image[c]) == 18
    assert is_boundary(image) is not None
    assert cobracket(z) == sym_map(boundary_E, delta1(z))
    assert not check_cycle_triviality(z)


def test_cycle_triviality_reports_missing_preimage(mocker):
    (z,) = kernel_basis("E", 3, 4)
    mocker.patch("graphcx.homology.cycles.is_boundary", return_value=None)
    assert check_cycle_triviality(z) == boundary_H(z)


def test_cycle_triviality_reports_cobracket_mismatch(mocker, theta_class):
    (z,) = kernel_basis("E", 3, 4)
    wrong = SymChain({(theta_class, theta_class): 1})
    mocker.patch("graphcx.homology.cycles.sym_map", return_value=wrong)
    assert check_cycle_triviality(z) == cobracket(z) - wrong
    assert check_cycle_triviality(z)


def test_bracket_of_cycles_is_a_boundary(theta_class):
    (z,) = kernel_basis("E", 3, 4)
    theta = monomial(theta_class)
    image = bracket(theta, z)
    assert image.vertex_counts() <= {5}
    assert is_boundary(image) is not None
    assert check_triviality(theta, z) == Chain()


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_rank_ignores_basis_order(data):
    matrix = boundary_matrix("E", 4, 5)
    rows = data.draw(st.permutations(range(matrix.rows)))
    cols = data.draw(st.permutations(range(matrix.cols)))
    shuffled = [{} for _ in range(matrix.rows)]
    for (r, c), value in matrix.entries.items():
        shuffled[rows[r]][cols[c]] = value
    assert rank(shuffled, matrix.shape) == matrix_rank(matrix)
