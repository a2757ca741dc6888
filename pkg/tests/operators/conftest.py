import pytest

from graphcx.chainspace import enumerate_basis, monomial


@pytest.fixture(scope="module")
def pool(loop3):
    """θ, the three-vertex class C and the trivalent classes A, B as chains."""
    (theta,) = enumerate_basis(2, 2).classes
    (c,), (a, b) = loop3
    return [monomial(cls) for cls in (theta, c, a, b)]
