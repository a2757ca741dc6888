"""Product, coproduct, bracket and the tensor square."""

from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from typing import Callable, Union

from graphcx.chainspace import Chain, SymChain, TensorChain, bilinear, koszul, monomial
from graphcx.graphcore import (
    EMPTY,
    GraphClass,
    OrientedGraph,
    Term,
    contract_half_pair,
    cut_paste,
    disjoint_union,
)

UNIT = monomial(EMPTY)


def _joined(x: GraphClass, y: GraphClass) -> tuple[OrientedGraph, int]:
    """Representative of X·Y and the first half-edge id belonging to Y."""
    rx = x.representative()
    shift = max(rx.structure.partner, default=-1) + 1
    return disjoint_union(rx, y.representative()), shift


@lru_cache(maxsize=None)
def _product_image(x: GraphClass, y: GraphClass) -> Chain:
    if x == EMPTY:
        return monomial(y)
    if y == EMPTY:
        return monomial(x)
    graph, _ = _joined(x, y)
    return Chain.from_terms([(1, graph)])


def product(x: Chain, y: Chain) -> Chain:
    """Disjoint union, Y numbered after X."""
    return bilinear(_product_image)(x, y)


def product_of(factors: Sequence[GraphClass]) -> Chain:
    return reduce(lambda acc, cls: product(acc, monomial(cls)), factors, UNIT)


def tensor(x: Chain, y: Chain) -> TensorChain:
    return TensorChain(
        ((a, b), cx * cy) for a, cx in x.items() for b, cy in y.items()
    )


def tensor_product(s: TensorChain, t: TensorChain) -> TensorChain:
    """(A⊗B)(C⊗D) = (-1)^(bc) AC⊗BD."""
    terms = []
    for (a, b), cs in s.items():
        for (c, d), ct in t.items():
            sign = koszul(b, c)
            left = _product_image(a, c)
            right = _product_image(b, d)
            for ac, cl in left.items():
                for bd, cr in right.items():
                    terms.append(((ac, bd), sign * cs * ct * cl * cr))
    return TensorChain(terms)


def multiply(t: Union[TensorChain, SymChain]) -> Chain:
    """μ(A⊗B) = A·B; on symmetric pairs μ(A⊙B) = A·B as well."""
    return Chain(
        (image, coeff * c)
        for (a, b), coeff in t.items()
        for image, c in _product_image(a, b).items()
    )


def tensor_map(
    fn: Callable[[Chain], Chain], t: TensorChain, odd: bool = True
) -> TensorChain:
    """Leibniz extension d(A⊗B) = dA⊗B + (-1)^(a|d|) A⊗dB."""
    terms = []
    for (a, b), coeff in t.items():
        for image, c in fn(monomial(a)).items():
            terms.append(((image, b), coeff * c))
        sign = -1 if odd and a.vertex_count % 2 else 1
        for image, c in fn(monomial(b)).items():
            terms.append(((a, image), sign * coeff * c))
    return TensorChain(terms)


def sym_map(fn: Callable[[Chain], Chain], s: SymChain, odd: bool = True) -> SymChain:
    return SymChain.from_tensor(tensor_map(fn, s.to_tensor(), odd))


def split_sign(degrees: Sequence[int], chosen: Sequence[int]) -> int:
    """Koszul sign of moving the factors in `chosen` to the front."""
    picked = set(chosen)
    flips = sum(
        degrees[j] * degrees[i]
        for i in picked
        for j in range(i)
        if j not in picked
    )
    return -1 if flips % 2 else 1


@lru_cache(maxsize=None)
def _coproduct_image(x: GraphClass) -> TensorChain:
    parts = x.components
    degrees = [part.vertex_count for part in parts]
    terms = []
    indices = range(len(parts))
    for size in range(len(parts) + 1):
        for chosen in combinations(indices, size):
            rest = [i for i in indices if i not in chosen]
            sign = split_sign(degrees, chosen)
            left = product_of([parts[i] for i in chosen])
            right = product_of([parts[i] for i in rest])
            for a, ca in left.items():
                for b, cb in right.items():
                    terms.append(((a, b), sign * ca * cb))
    return TensorChain(terms)


def coproduct(c: Chain) -> TensorChain:
    """Multiplicative extension of Δ(X) = X⊗1 + 1⊗X on connected X."""
    return TensorChain(
        (pair, coeff * t)
        for cls, coeff in c.items()
        for pair, t in _coproduct_image(cls).items()
    )


def cross_pairs(x: GraphClass, y: GraphClass) -> tuple[OrientedGraph, list[tuple[int, int]]]:
    graph, shift = _joined(x, y)
    half_edges = graph.structure.half_edges
    pairs = [(h, k) for h in half_edges if h < shift for k in half_edges if k >= shift]
    return graph, pairs


def bracket_terms(x: GraphClass, y: GraphClass) -> list[Term]:
    graph, pairs = cross_pairs(x, y)
    terms = (contract_half_pair(graph, h, k) for h, k in pairs)
    return [term for term in terms if term is not None]


def mu1_terms(x: GraphClass, y: GraphClass) -> list[Term]:
    """(XY)⟨hk⟩ for h initial in X and k in Y: one pair per orbit
    {(h, k), (h̄, k̄)}."""
    graph, pairs = cross_pairs(x, y)
    return [cut_paste(graph, h, k) for h, k in pairs if graph.is_initial(h)]


@lru_cache(maxsize=None)
def _bracket_image(x: GraphClass, y: GraphClass) -> Chain:
    return Chain.from_terms(bracket_terms(x, y))


@lru_cache(maxsize=None)
def _mu1_image(x: GraphClass, y: GraphClass) -> Chain:
    return Chain.from_terms(mu1_terms(x, y))


def bracket(x: Chain, y: Chain) -> Chain:
    """Sum of (XY)_hk over h in X and k in Y."""
    return bilinear(_bracket_image)(x, y)


def mu1(x: Chain, y: Chain) -> Chain:
    """Half the sum of (XY)⟨hk⟩ over h in X and k in Y."""
    return bilinear(_mu1_image)(x, y)


def mu1_tensor(t: TensorChain) -> Chain:
    return Chain(
        (image, coeff * c)
        for (a, b), coeff in t.items()
        for image, c in _mu1_image(a, b).items()
    )


def pairing(x: GraphClass, y: GraphClass) -> int:
    """|Aut X| when the classes coincide, 0 otherwise."""
    return x.aut_order if x == y else 0


def pair_chains(c: Chain, d: Chain) -> Fraction:
    return sum(
        (coeff * d.coefficient(cls) * cls.aut_order for cls, coeff in c.items()),
        Fraction(0),
    )


def pair_tensors(s: TensorChain, t: TensorChain) -> Fraction:
    """⟨A⊗B, C⊗D⟩ = ⟨A, C⟩⟨B, D⟩, extended bilinearly."""
    return sum(
        (
            coeff * t.coefficient(pair) * pair[0].aut_order * pair[1].aut_order
            for pair, coeff in s.items()
        ),
        Fraction(0),
    )
