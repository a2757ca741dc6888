import pytest

from graphcx.chainspace import Chain, SymChain, monomial
from graphcx.errors import PreconditionError, VerificationError
from graphcx.operators import (
    cobracket,
    cobracket_tensor,
    delta1,
    mu_cobracket,
    mu_theta,
    partition_cobracket,
    product,
    separating_cobracket,
    separating_delta1,
)


def test_theta_has_no_cobracket(theta_class):
    theta = monomial(theta_class)
    assert cobracket(theta) == SymChain()
    assert mu_theta(theta) == Chain()


def test_forms_agree(pool):
    for x in pool:
        theta = cobracket(x, check=True)
        assert partition_cobracket(x) == theta
        assert separating_cobracket(x) == theta


def test_forms_agree_on_products(pool):
    theta, c, a, _ = pool
    for x in (product(theta, c), product(c, a), product(theta, theta)):
        assert cobracket(x, check=True) == partition_cobracket(x)


def test_cobracket_tensor_is_symmetric(pool):
    for x in pool:
        SymChain.from_tensor(cobracket_tensor(x))


def test_check_reports_disagreement(mocker, pool):
    mocker.patch(
        "graphcx.operators.coalgebra.partition_cobracket",
        return_value=SymChain({(next(iter(pool[0])), next(iter(pool[0]))): 1}),
    )
    with pytest.raises(VerificationError):
        cobracket(pool[2], check=True)


@pytest.mark.parametrize(
    "fn", [separating_cobracket, mu_theta, separating_delta1]
)
def test_separating_forms_need_connected(fn, pool):
    with pytest.raises(PreconditionError):
        fn(product(pool[0], pool[0]))


def test_mu_theta_is_mu_of_cobracket(pool):
    for x in pool:
        assert mu_theta(x) == mu_cobracket(x)


def test_cobracket_pieces_have_two_components(pool):
    for x in pool:
        for term in mu_theta(x):
            assert term.component_count == 2


def test_delta1_separating_form(pool):
    for x in pool:
        assert delta1(x) == separating_delta1(x)
