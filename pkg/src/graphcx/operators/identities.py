"""Residuals of the algebraic identities of the graph complex.

Every check returns a residual that is empty (or zero) exactly when the
identity holds on its inputs. Inputs are monomial chains unless stated.
"""

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from itertools import combinations, product as cartesian
from math import factorial
from typing import Optional, Union

from graphcx.chainspace import Chain, SymChain, TensorChain
from graphcx.errors import PreconditionError
from graphcx.graphcore import (
    GraphClass,
    OrientedGraph,
    Term,
    automorphism_order,
    canonicalize,
    contract_half_pair,
    disjoint_union,
    permutation_sign,
)

from .algebra import (
    UNIT,
    bracket,
    coproduct,
    mu1,
    mu1_tensor,
    pair_chains,
    pair_tensors,
    product,
    sym_map,
    tensor,
    tensor_map,
    tensor_product,
)
from .coalgebra import (
    cobracket,
    delta1,
    mu_cobracket,
    mu_theta,
    partition_cobracket,
    separating_cobracket,
)
from .differentials import (
    alpha,
    boundary_E,
    boundary_H,
    delta_H,
    delta_H_full,
    half_pairs,
)

logger = logging.getLogger(__name__)

Residual = Union[Chain, TensorChain, SymChain, Fraction, int]


def residual_terms(residual: Residual) -> int:
    if isinstance(residual, (Chain, TensorChain, SymChain)):
        return len(residual)
    return int(residual != 0)


def degree(c: Chain) -> int:
    """Vertex parity of a chain homogeneous in parity."""
    parities = {cls.vertex_count % 2 for cls in c}
    if len(parities) > 1:
        raise PreconditionError(f"{c!r} mixes vertex parities")
    return parities.pop() if parities else 0


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _first_nonzero(*residuals):
    for residual in residuals:
        if residual:
            return residual
    return residuals[-1]


def _require_connected(*chains: Chain) -> None:
    for c in chains:
        for cls in c:
            if not cls.is_connected:
                raise PreconditionError(f"{cls!r} is not connected")


def check_d_squared(x: Chain) -> Chain:
    def total(c: Chain) -> Chain:
        return boundary_E(c) + boundary_H(c)

    return _first_nonzero(
        boundary_E(boundary_E(x)),
        boundary_H(boundary_H(x)),
        total(total(x)),
    )


def check_anticommutation(x: Chain) -> Chain:
    return boundary_E(boundary_H(x)) + boundary_H(boundary_E(x))


def _collapse_twice(graph: OrientedGraph, h: int, k: int, r: int, s: int) -> list[Term]:
    first = contract_half_pair(graph, h, k)
    if first is None:
        return []
    second = contract_half_pair(first[1], r, s)
    if second is None:
        return []
    return [(first[0] * second[0], second[1])]


def check_orientation_lemma(x: Chain) -> Chain:
    """(X_hk)_rs + (X_rs)_hk over disjoint admissible pairs."""
    terms: list[Term] = []
    for cls in x:
        graph = cls.representative()
        for (h, k), (r, s) in combinations(half_pairs(graph), 2):
            if {h, k} & {r, s} or {r, s} == {graph.partner(h), graph.partner(k)}:
                continue
            terms.extend(_collapse_twice(graph, h, k, r, s))
            terms.extend(_collapse_twice(graph, r, s, h, k))
    return Chain.from_terms(terms)


def check_expansion(x: Chain, y: Chain) -> TensorChain:
    """Δ(XY) against XY⊗1 + 1⊗XY + X⊗Y + (-1)^(xy) Y⊗X for connected X, Y."""
    _require_connected(x, y)
    xy = product(x, y)
    expected = (
        tensor(xy, UNIT)
        + tensor(UNIT, xy)
        + tensor(x, y)
        + tensor(y, x) * _sign(degree(x) * degree(y))
    )
    return coproduct(xy) - expected


def check_derivation(x: Chain, y: Chain) -> Chain:
    expected = product(boundary_E(x), y) + product(x, boundary_E(y)) * _sign(degree(x))
    return boundary_E(product(x, y)) - expected


def check_coderivation(x: Chain) -> TensorChain:
    return coproduct(boundary_E(x)) - tensor_map(boundary_E, coproduct(x))


def check_bracket_defect(x: Chain, y: Chain) -> Chain:
    defect = (
        boundary_H(product(x, y))
        - product(boundary_H(x), y)
        - product(x, boundary_H(y)) * _sign(degree(x))
    )
    return bracket(x, y) - defect


def check_bracket_symmetry(x: Chain, y: Chain) -> Chain:
    return bracket(x, y) - bracket(y, x) * _sign(degree(x) * degree(y))


def check_jacobi(x: Chain, y: Chain, z: Chain) -> Chain:
    a, b, c = degree(x), degree(y), degree(z)
    return (
        bracket(bracket(x, y), z)
        + bracket(bracket(z, x), y) * _sign(c * (a + b))
        + bracket(bracket(y, z), x) * _sign(a * (b + c))
    )


def check_gerstenhaber(x: Chain, y: Chain, z: Chain) -> Chain:
    """[X, YZ] − [X, Y]Z − (-1)^(yz) [X, Z]Y."""
    return (
        bracket(x, product(y, z))
        - product(bracket(x, y), z)
        - product(bracket(x, z), y) * _sign(degree(y) * degree(z))
    )


def check_bv(u: Chain, v: Chain, w: Chain) -> Chain:
    """Seven-term identity making ∂_H a second order operator."""
    a, b = degree(u), degree(v)
    uv, vw, uw = product(u, v), product(v, w), product(u, w)
    expected = (
        product(boundary_H(uv), w)
        + product(u, boundary_H(vw)) * _sign(a)
        + product(v, boundary_H(uw)) * _sign((a - 1) * b)
        - product(product(boundary_H(u), v), w)
        - product(product(u, boundary_H(v)), w) * _sign(a)
        - product(uv, boundary_H(w)) * _sign(a + b)
    )
    return boundary_H(product(uv, w)) - expected


def check_cobracket_forms(x: Chain) -> SymChain:
    """The definition of θ against its partition and separating forms."""
    theta = cobracket(x)
    residuals = [partition_cobracket(x) - theta]
    if all(cls.is_connected for cls in x):
        residuals.append(separating_cobracket(x) - theta)
    return _first_nonzero(*residuals)


def check_cobracket_product(x: Chain, y: Chain) -> TensorChain:
    """θ(XY) − θ(X)Δ(Y) − (-1)^(xy) θ(Y)Δ(X)."""
    sign = _sign(degree(x) * degree(y))
    expected = tensor_product(cobracket(x).to_tensor(), coproduct(y)) + (
        tensor_product(cobracket(y).to_tensor(), coproduct(x)) * sign
    )
    return cobracket(product(x, y)).to_tensor() - expected


def check_mu_theta(x: Chain) -> Chain:
    """μθ against μ composed with the cobracket, on connected X."""
    return mu_theta(x) - mu_cobracket(x)


def check_delta_squared(x: Chain) -> Chain:
    return delta_H(delta_H(x))


def check_delta_forms(x: Chain) -> Chain:
    return delta_H(x) - delta_H_full(x)


def check_duality(x: Chain, y: Chain) -> Fraction:
    """⟨δ_H X, Y⟩ − ⟨X, ∂_H Y⟩."""
    return pair_chains(delta_H(x), y) - pair_chains(x, boundary_H(y))


def check_product_duality(x: Chain, y: Chain) -> Fraction:
    """⟨Δ(XY), X⊗Y⟩ − ⟨XY, XY⟩ for monomials; on powers of one graph this is
    |Aut(X^(p+q))| = C(p+q, p)|Aut(X^p)||Aut(X^q)|."""
    xy = product(x, y)
    return pair_tensors(coproduct(xy), tensor(x, y)) - pair_chains(xy, xy)


def check_compatibility(x: Chain, y: Chain) -> Chain:
    """μθ[X, Y] + [μθX, Y] + (-1)^x [X, μθY] for connected X, Y."""
    _require_connected(x, y)
    return (
        mu_cobracket(bracket(x, y))
        + bracket(mu_theta(x), y)
        + bracket(x, mu_theta(y)) * _sign(degree(x))
    )


def check_closure(x: Chain, y: Chain) -> Chain:
    """Terms of [X, Y] that are not 1PI and factors of θ(X) with a bridge."""
    for cls in (*x, *y):
        if not cls.is_1PI:
            raise PreconditionError(f"{cls!r} is not one-particle irreducible")
    offending = [(cls, c) for cls, c in bracket(x, y).items() if not cls.is_1PI]
    for (a, b), c in cobracket(x).items():
        offending.extend((part, c) for part in (a, b) if part.has_bridge)
    return Chain(offending)


def check_mu1_homotopy(x: Chain, y: Chain) -> Chain:
    """[X, Y] − (∂_E μ₁ − μ₁ ∂_E)(X⊗Y)."""
    homotopy = boundary_E(mu1(x, y)) - mu1_tensor(tensor_map(boundary_E, tensor(x, y)))
    return bracket(x, y) - homotopy


def check_alpha_homotopy(x: Chain) -> Chain:
    return boundary_H(x) - (boundary_E(alpha(x)) - alpha(boundary_E(x)))


def check_delta1_homotopy(x: Chain) -> SymChain:
    homotopy = sym_map(boundary_E, delta1(x)) - delta1(boundary_E(x))
    return cobracket(x) - homotopy


def check_bracket_descent(x: Chain, y: Chain) -> Chain:
    """∂_E[X, Y] + [∂_E X, Y] + (-1)^x [X, ∂_E Y]."""
    return (
        boundary_E(bracket(x, y))
        + bracket(boundary_E(x), y)
        + bracket(x, boundary_E(y)) * _sign(degree(x))
    )


def check_cobracket_descent(x: Chain) -> SymChain:
    """θ∂_E + ∂_E θ."""
    return cobracket(boundary_E(x)) + sym_map(boundary_E, cobracket(x))


def power(graph_class: GraphClass, n: int) -> OrientedGraph:
    result = graph_class.representative()
    for _ in range(n - 1):
        result = disjoint_union(result, graph_class.representative())
    return result


def check_aut_powers(x: GraphClass, n: int) -> int:
    """|Aut(Xⁿ)| − n!|Aut X|ⁿ."""
    return automorphism_order(power(x, n)) - factorial(n) * x.aut_order**n


def check_relabelling(
    x: GraphClass, permutation: Sequence[int], flips: Iterable[int] = ()
) -> Chain:
    """Canonicalization against the expected sign of a renumbered, partly
    reversed representative."""
    flips = sorted(set(flips))
    graph = x.representative().relabel(permutation).flip(*flips)
    graph_class, sign = canonicalize(graph)
    expected = permutation_sign(permutation) * _sign(len(flips))
    return Chain({graph_class: sign}) - Chain({x: expected})


def find_incompatible_pair(
    candidates: Sequence[GraphClass],
) -> Optional[tuple[GraphClass, GraphClass, Chain]]:
    """First pair of connected classes, at least one bridged, whose
    compatibility residual does not vanish."""
    bridged = [cls for cls in candidates if cls.is_connected and cls.has_bridge]
    plain = [cls for cls in candidates if cls.is_1PI]
    pairs = [*cartesian(bridged, plain), *combinations(bridged, 2)]
    pairs.sort(key=lambda pair: (pair[0].vertex_count + pair[1].vertex_count, pair))
    logger.debug("searching %d bridged pairs", len(pairs))
    for x, y in pairs:
        residual = check_compatibility(Chain({x: 1}), Chain({y: 1}))
        if residual:
            return x, y, residual
    return None
