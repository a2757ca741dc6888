"""Homology of the ∂_E complex on small slices."""

import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from typing import TYPE_CHECKING, NamedTuple, Optional, Union

from graphcx.chainspace import (
    DEFAULT_CAPS,
    Caps,
    Chain,
    SymChain,
    enumerate_basis,
    trivalent_bound,
)
from graphcx.errors import PreconditionError, VerificationError
from graphcx.operators import boundary_E, boundary_H, bracket, cobracket, delta1
from graphcx.operators.algebra import sym_map

from .linalg import DEFAULT_PRIMES, nullspace, rank, solve
from .matrices import BoundaryMatrix, boundary_matrix

if TYPE_CHECKING:
    from graphcx.chainspace import BasisStore

logger = logging.getLogger(__name__)


class HomologyRow(NamedTuple):
    loop_degree: int
    vertices: int
    dim_basis: int
    betti: int


def matrix_rank(matrix: BoundaryMatrix, primes: Iterable[int] = DEFAULT_PRIMES) -> int:
    return rank(matrix.row_dicts(), matrix.shape, primes)


def betti(
    loops: int,
    vertices: int,
    connected: bool = True,
    one_pi: bool = False,
    *,
    caps: Caps = DEFAULT_CAPS,
    primes: Iterable[int] = DEFAULT_PRIMES,
    jobs: Optional[int] = None,
    store: Optional["BasisStore"] = None,
) -> int:
    """dim ker(∂_E out of v vertices) - dim im(∂_E into v vertices)."""
    primes = tuple(primes)
    outgoing = boundary_matrix(
        "E", loops, vertices, connected, one_pi, caps=caps, jobs=jobs, store=store
    )
    incoming = boundary_matrix(
        "E", loops, vertices + 1, connected, one_pi, caps=caps, jobs=jobs, store=store
    )
    dim = outgoing.cols
    result = dim - matrix_rank(outgoing, primes) - matrix_rank(incoming, primes)
    logger.debug("betti b=%d v=%d: dim %d -> %d", loops, vertices, dim, result)
    return result


def kernel_basis(
    op: str,
    loops: int,
    vertices: int,
    connected: bool = True,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> list[Chain]:
    """Primitive integer cycles spanning the kernel, first coefficient positive."""
    matrix = boundary_matrix(op, loops, vertices, connected, caps=caps, store=store)
    classes = matrix.domain.classes
    return [
        Chain({cls: x for cls, x in zip(classes, vector) if x})
        for vector in nullspace(matrix.row_dicts(), matrix.shape)
    ]


def _solve_block(
    block: Sequence[tuple],
    loops: int,
    vertices: int,
    connected: bool,
    caps: Caps,
    store: Optional["BasisStore"],
) -> Optional[Chain]:
    matrix = boundary_matrix(
        "E", loops, vertices + 1, connected, caps=caps, store=store
    )
    target = {}
    for graph_class, coeff in block:
        row = matrix.codomain.index_of(graph_class)
        if row is None:
            raise PreconditionError(f"{graph_class!r} is outside the basis")
        target[row] = coeff
    solution = solve(matrix.row_dicts(), matrix.shape, target)
    if solution is None:
        return None
    return Chain(
        {cls: x for cls, x in zip(matrix.domain.classes, solution) if x}
    )


def is_boundary(
    c: Chain,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> Optional[Chain]:
    """A chain whose ∂_E is `c`, or None when `c` is not a boundary.

    Each (vertices, loops) block is solved on its own.
    """
    connected = all(cls.is_connected for cls in c)
    blocks: dict[tuple[int, int], list[tuple]] = defaultdict(list)
    for graph_class, coeff in c.items_sorted():
        blocks[(graph_class.vertex_count, graph_class.loop_degree)].append(
            (graph_class, coeff)
        )
    preimage = Chain()
    for (vertices, loops), block in sorted(blocks.items()):
        part = _solve_block(block, loops, vertices, connected, caps, store)
        if part is None:
            logger.debug("no preimage for block v=%d b=%d", vertices, loops)
            return None
        preimage = preimage + part
    if boundary_E(preimage) != c:
        raise VerificationError(f"preimage of {c!r} does not map back onto it")
    return preimage


def euler_characteristic(
    loops: int,
    connected: bool = True,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> tuple[int, int]:
    """Alternating sums over vertices of slice dimensions and of Betti numbers."""
    chain_side = homology_side = 0
    for vertices in range(1, trivalent_bound(loops) + 1):
        sign = -1 if vertices % 2 else 1
        dim = len(enumerate_basis(vertices, loops, connected, caps=caps, store=store))
        chain_side += sign * dim
        if dim:
            homology_side += sign * betti(
                loops, vertices, connected, caps=caps, store=store
            )
    return chain_side, homology_side


def homology_table(
    loops: Iterable[int],
    caps: Caps = DEFAULT_CAPS,
    connected: bool = True,
    one_pi: bool = False,
    *,
    primes: Iterable[int] = DEFAULT_PRIMES,
    jobs: Optional[int] = None,
    store: Optional["BasisStore"] = None,
) -> list[HomologyRow]:
    """Rows for every non-empty slice, loops ascending, vertices descending."""
    rows = []
    for b in sorted(set(loops)):
        top = min(trivalent_bound(b), caps.max_vertices)
        for vertices in range(top, 0, -1):
            dim = len(
                enumerate_basis(vertices, b, connected, one_pi, caps=caps, store=store)
            )
            if not dim:
                continue
            value = betti(
                b,
                vertices,
                connected,
                one_pi,
                caps=caps,
                primes=primes,
                jobs=jobs,
                store=store,
            )
            rows.append(HomologyRow(b, vertices, dim, value))
    return rows


def _require_cycles(*chains: Chain) -> None:
    if any(boundary_E(c) for c in chains):
        raise PreconditionError("triviality is only claimed for cycles")


def check_triviality(
    x: Chain,
    y: Chain,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> Chain:
    """The bracket of two cycles must be a ∂_E-boundary; returns it when not."""
    _require_cycles(x, y)
    image = bracket(x, y)
    if is_boundary(image, caps=caps, store=store) is None:
        return image
    return Chain()


def check_cycle_triviality(
    z: Chain,
    *,
    caps: Caps = DEFAULT_CAPS,
    store: Optional["BasisStore"] = None,
) -> Union[Chain, SymChain]:
    """∂_H z must be a ∂_E-boundary and θ(z) must equal ∂_E Δ₁(z).

    Returns ∂_H z when it has no preimage, else the cobracket difference.
    """
    _require_cycles(z)
    image = boundary_H(z)
    if is_boundary(image, caps=caps, store=store) is None:
        return image
    return cobracket(z) - sym_map(boundary_E, delta1(z))


def _loops(c: Chain) -> int:
    return max(cls.loop_degree for cls in c)


def _vertices(c: Chain) -> int:
    return max(cls.vertex_count for cls in c)


def cycle_basis(caps: Caps = DEFAULT_CAPS, top: Optional[int] = None) -> list[Chain]:
    """Kernel bases of ∂_E on connected slices up to loop degree `top`."""
    top = caps.max_loop_degree if top is None else top
    return [
        z
        for b in range(2, top + 1)
        for v in range(1, min(trivalent_bound(b), caps.max_vertices) + 1)
        for z in kernel_basis("E", b, v, caps=caps)
    ]


def cycle_pairs(caps: Caps = DEFAULT_CAPS) -> list[tuple[Chain, Chain]]:
    """Pairs of connected ∂_E-cycles whose bracket and its preimage slice
    stay inside the caps."""
    cycles = cycle_basis(caps, caps.max_loop_degree - 1)
    return [
        (z, w)
        for i, z in enumerate(cycles)
        for w in cycles[i:]
        if _loops(z) + _loops(w) - 1 <= caps.max_loop_degree
        and _vertices(z) + _vertices(w) <= caps.max_vertices
    ]
