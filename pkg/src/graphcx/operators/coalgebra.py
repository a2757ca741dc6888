"""The cobracket θ = Δ∂_H − ∂_HΔ, its explicit forms and the homotopy Δ₁."""

import logging
from bisect import bisect_right
from functools import lru_cache
from itertools import accumulate, combinations

from graphcx.chainspace import Chain, SymChain, TensorChain
from graphcx.errors import PreconditionError, VerificationError
from graphcx.graphcore import GraphClass, canonical_form, components

from .algebra import coproduct, multiply, product_of, split_sign, tensor_map
from .differentials import alpha, boundary_H, half_pair_terms, half_pairs

logger = logging.getLogger(__name__)


def cobracket_tensor(c: Chain) -> TensorChain:
    """θ straight from its definition, as a tensor."""
    return coproduct(boundary_H(c)) - tensor_map(boundary_H, coproduct(c))


def _two_component_pairs(c: Chain) -> SymChain:
    return SymChain(
        (cls.components, coeff) for cls, coeff in c.items() if cls.component_count == 2
    )


def _require_connected(c: Chain, what: str) -> None:
    for cls in c:
        if not cls.is_connected:
            raise PreconditionError(f"{what} needs connected graphs, got {cls!r}")


def separating_cobracket(c: Chain) -> SymChain:
    """Σ over separating pairs {h, k} of A⊙B where X_hk = A·B."""
    _require_connected(c, "the separating form of θ")
    return _two_component_pairs(boundary_H(c))


@lru_cache(maxsize=None)
def _partition_image(x: GraphClass) -> TensorChain:
    graph = x.representative()
    owner = {}
    for index, vertices in enumerate(components(graph)):
        owner.update(dict.fromkeys(vertices, index))

    terms = []
    for (h, k), term in zip(half_pairs(graph), half_pair_terms(graph)):
        if term is None:
            continue
        sign, out = term
        form = canonical_form(out)
        if not form.sign:
            continue
        parts = form.graph_class.components
        offsets = list(accumulate(part.vertex_count for part in parts))
        involved = {owner[graph.vertex(h)], owner[graph.vertex(k)]}
        new = {
            bisect_right(offsets, form.numbering[out.number(e)])
            for e in out.structure.partner
            if owner[graph.vertex(e)] in involved
        }
        if len(new) != 2:
            continue
        first, second = sorted(new)
        degrees = [part.vertex_count for part in parts]
        indices = range(len(parts))
        for size in range(1, len(parts)):
            for chosen in combinations(indices, size):
                if (first in chosen) == (second in chosen):
                    continue
                rest = [i for i in indices if i not in chosen]
                coeff = sign * form.sign * split_sign(degrees, chosen)
                left = product_of([parts[i] for i in chosen])
                right = product_of([parts[i] for i in rest])
                terms.extend(
                    ((a, b), coeff * ca * cb)
                    for a, ca in left.items()
                    for b, cb in right.items()
                )
    return TensorChain(terms)


def partition_cobracket(c: Chain) -> SymChain:
    """θ over pairs whose collapse leaves their components in two new
    pieces, summed over the splittings that separate those pieces."""
    tensor = TensorChain(
        (pair, coeff * t)
        for cls, coeff in c.items()
        for pair, t in _partition_image(cls).items()
    )
    return SymChain.from_tensor(tensor)


def cobracket(c: Chain, check: bool = False) -> SymChain:
    result = SymChain.from_tensor(cobracket_tensor(c))
    if check:
        if partition_cobracket(c) != result:
            raise VerificationError(f"θ disagrees with its partition form on {c!r}")
        connected = Chain((cls, coeff) for cls, coeff in c.items() if cls.is_connected)
        expected = SymChain.from_tensor(cobracket_tensor(connected))
        if separating_cobracket(connected) != expected:
            raise VerificationError(
                f"θ disagrees with its separating form on {connected!r}"
            )
        logger.debug("θ cross-checked on %d classes", len(c))
    return result


def mu_theta(c: Chain) -> Chain:
    """Σ of X_hk over separating pairs, for connected X."""
    _require_connected(c, "μθ")
    return Chain(
        (cls, coeff) for cls, coeff in boundary_H(c).items() if cls.component_count == 2
    )


def mu_cobracket(c: Chain) -> Chain:
    """μ∘θ on arbitrary chains."""
    return multiply(cobracket(c))


def delta1(c: Chain) -> SymChain:
    """Δα − (α⊗1 + 1⊗α)Δ, the defect of α as a coderivation."""
    tensor = coproduct(alpha(c)) - tensor_map(alpha, coproduct(c), odd=False)
    return SymChain.from_tensor(tensor)


def separating_delta1(c: Chain) -> SymChain:
    """Σ of A⊙B over cut-and-paste terms X⟨xy⟩ = A·B, for connected X."""
    _require_connected(c, "the separating form of Δ₁")
    return _two_component_pairs(alpha(c))