"""Exact rational chains on graph classes, their tensor squares and
graded-symmetric pairs."""

from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from functools import wraps
from numbers import Rational
from typing import Callable, Generic, TypeVar, Union

from graphcx.errors import VerificationError
from graphcx.graphcore import GraphClass, OrientedGraph, Term, canonicalize

Scalar = Union[int, Fraction]
_K = TypeVar("_K")
_S = TypeVar("_S", bound="_Combination")


def koszul(a: GraphClass, b: GraphClass) -> int:
    """(-1)^(ab) for vertex degrees a and b."""
    return -1 if a.vertex_count % 2 and b.vertex_count % 2 else 1


class _Combination(Mapping[_K, Fraction], Generic[_K]):
    """Immutable finite linear combination without zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[_K, Scalar], Iterable[tuple[_K, Scalar]]] = ()):
        accumulated: dict[_K, Fraction] = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            if coeff and not self._is_zero(key):
                accumulated[key] += Fraction(coeff)
        self._terms = {key: c for key, c in accumulated.items() if c}

    @staticmethod
    def _is_zero(key) -> bool:
        return False

    @staticmethod
    def _sort_key(key):
        return key

    def __getitem__(self, key: _K) -> Fraction:
        return self._terms[key]

    def __iter__(self) -> Iterator[_K]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, key: _K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items_sorted(self) -> list[tuple[_K, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: self._sort_key(item[0]))

    def __add__(self: _S, other: _S) -> _S:
        if type(other) is not type(self):
            return NotImplemented
        return type(self)([*self._terms.items(), *other._terms.items()])

    def __sub__(self: _S, other: _S) -> _S:
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self: _S) -> _S:
        return type(self)({key: -c for key, c in self._terms.items()})

    def __mul__(self: _S, scalar: Scalar) -> _S:
        if not isinstance(scalar, Rational):
            return NotImplemented
        return type(self)({key: c * scalar for key, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{key!r}: {c}" for key, c in self.items_sorted())
        return f"{self.__class__.__name__}({{{body}}})"


class Chain(_Combination[GraphClass]):
    """Rational combination of graph classes; orientation reversing classes
    are zero and never stored."""

    __slots__ = ()

    @staticmethod
    def _is_zero(key: GraphClass) -> bool:
        return key.orientation_reversing

    @staticmethod
    def _sort_key(key: GraphClass):
        return key.key

    def vertex_counts(self) -> set[int]:
        return {cls.vertex_count for cls in self}

    @classmethod
    def from_terms(cls, terms: Iterable[Term], coeff: Scalar = 1) -> "Chain":
        """Canonicalize signed labelled graphs and sum them."""
        result: list[tuple[GraphClass, Scalar]] = []
        for sign, graph in terms:
            if any(tail == head for tail, head in graph.directed_edges()):
                continue
            graph_class, orientation = canonicalize(graph)
            if orientation:
                result.append((graph_class, sign * orientation * coeff))
        return cls(result)


class TensorChain(_Combination[tuple[GraphClass, GraphClass]]):
    """Rational combination of ordered pairs A⊗B."""

    __slots__ = ()

    @staticmethod
    def _is_zero(key: tuple[GraphClass, GraphClass]) -> bool:
        return key[0].orientation_reversing or key[1].orientation_reversing

    @staticmethod
    def _sort_key(key: tuple[GraphClass, GraphClass]):
        return key[0].key, key[1].key


class SymChain(_Combination[tuple[GraphClass, GraphClass]]):
    """Graded-symmetric pairs A⊙B = A⊗B + (-1)^(ab) B⊗A.

    Keys are stored with A <= B; the swap of an odd class with itself
    vanishes.
    """

    __slots__ = ()

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        super().__init__(self._normal(pair, coeff) for pair, coeff in items)

    @staticmethod
    def _normal(pair, coeff):
        a, b = pair
        if b < a:
            return (b, a), coeff * koszul(a, b)
        if a == b and a.vertex_count % 2:
            return (a, b), 0
        return (a, b), coeff

    @staticmethod
    def _is_zero(key: tuple[GraphClass, GraphClass]) -> bool:
        return key[0].orientation_reversing or key[1].orientation_reversing

    @staticmethod
    def _sort_key(key: tuple[GraphClass, GraphClass]):
        return key[0].key, key[1].key

    def to_tensor(self) -> TensorChain:
        terms = []
        for (a, b), c in self.items():
            terms.append(((a, b), c))
            terms.append(((b, a), c * koszul(a, b)))
        return TensorChain(terms)

    @classmethod
    def from_tensor(cls, tensor: TensorChain) -> "SymChain":
        for (a, b), c in tensor.items():
            if tensor.coefficient((b, a)) != c * koszul(a, b):
                raise VerificationError(
                    f"tensor is not graded symmetric at {a!r} ⊗ {b!r}"
                )
        terms = []
        for (a, b), c in tensor.items():
            if a < b:
                terms.append(((a, b), c))
            elif a == b:
                terms.append(((a, b), c / 2))
        return cls(terms)


def monomial(graph_class: GraphClass, coeff: Scalar = 1) -> Chain:
    return Chain({graph_class: coeff})


def normalize(graph: OrientedGraph, coeff: Scalar = 1) -> Chain:
    """The chain of a labelled oriented graph: coeff · sign · class."""
    return Chain.from_terms([(1, graph)], coeff)


def add(*chains: Chain) -> Chain:
    return Chain(item for chain in chains for item in chain.items())


def scale(chain: Chain, coeff: Scalar) -> Chain:
    return chain * coeff


def coefficient(chain: Chain, graph_class: GraphClass) -> Fraction:
    return chain.coefficient(graph_class)


def linear(per_class: Callable[[GraphClass], Chain]) -> Callable[[Chain], Chain]:
    """Extend a map defined on classes linearly to chains."""

    @wraps(per_class)
    def apply(chain: Chain) -> Chain:
        return Chain(
            (image, coeff * c)
            for graph_class, coeff in chain.items()
            for image, c in per_class(graph_class).items()
        )

    return apply


def bilinear(
    per_pair: Callable[[GraphClass, GraphClass], Chain],
) -> Callable[[Chain, Chain], Chain]:
    """Extend a map defined on pairs of classes bilinearly to chains."""

    @wraps(per_pair)
    def apply(x: Chain, y: Chain) -> Chain:
        return Chain(
            (image, cx * cy * c)
            for a, cx in x.items()
            for b, cy in y.items()
            for image, c in per_pair(a, b).items()
        )

    return apply
