import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Optional

from fsspec.callbacks import DEFAULT_CALLBACK, Callback

from graphcx.chainspace import (
    DEFAULT_CAPS,
    BasisSlice,
    Caps,
    Chain,
    enumerate_basis,
    enumerate_excess_slice,
    monomial,
)
from graphcx.errors import PreconditionError, VerificationError
from graphcx.executors import map_ordered
from graphcx.operators import boundary_E, boundary_H

if TYPE_CHECKING:
    from graphcx.chainspace import BasisStore

logger = logging.getLogger(__name__)

OPERATORS: dict[str, Callable[[Chain], Chain]] = {"E": boundary_E, "H": boundary_H}


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse integer matrix of an operator: entry (i, j) is the coefficient
    of codomain class i in the image of domain class j."""

    op: str
    domain: BasisSlice
    codomain: BasisSlice
    entries: Mapping[tuple[int, int], int]

    @property
    def rows(self) -> int:
        return len(self.codomain)

    @property
    def cols(self) -> int:
        return len(self.domain)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> dict[int, int]:
        return {r: v for (r, c), v in self.entries.items() if c == j}

    def row_dicts(self) -> list[dict[int, int]]:
        result: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            result[r][c] = v
        return result

    def matmul(self, other: "BoundaryMatrix") -> dict[tuple[int, int], int]:
        """Entries of self ∘ other."""
        if other.codomain.classes != self.domain.classes:
            raise PreconditionError("matrices do not compose")
        by_row: dict[int, dict[int, int]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, {})[c] = v
        result: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, {}).items():
                result[(r, c)] = result.get((r, c), 0) + v * w
        return {key: v for key, v in result.items() if v}

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        lines.extend(
            f"{r + 1} {c + 1} {v}" for (r, c), v in sorted(self.entries.items())
        )
        return "\n".join(lines) + "\n"


def _column(
    operator: Callable[[Chain], Chain], codomain: BasisSlice
) -> Callable[..., dict[int, int]]:
    def build(graph_class) -> dict[int, int]:
        column = {}
        for image, coeff in operator(monomial(graph_class)).items():
            row = codomain.index_of(image)
            if row is None:
                raise VerificationError(f"{image!r} is outside the codomain slice")
            if coeff.denominator != 1:
                raise VerificationError(f"non-integral entry {coeff} for {image!r}")
            column[row] = int(coeff)
        return column

    return build


def boundary_matrix(
    op: str,
    loops: int,
    vertices: int,
    connected: bool = True,
    one_pi: bool = False,
    *,
    caps: Caps = DEFAULT_CAPS,
    jobs: Optional[int] = None,
    callback: Callback = DEFAULT_CALLBACK,
    store: Optional["BasisStore"] = None,
) -> BoundaryMatrix:
    """Matrix of ∂_E or ∂_H from `vertices` to `vertices - 1` vertices.

    ∂_E uses slices graded by loop degree. ∂_H does not preserve
    connectivity, so it uses excess slices and needs `connected=False`.
    """
    if op not in OPERATORS:
        raise PreconditionError(f"unknown operator {op!r}")
    if op == "H":
        if connected or one_pi:
            raise PreconditionError("∂_H needs connected=False and one_pi=False")
        domain = enumerate_excess_slice(vertices, loops, caps=caps, store=store)
        codomain = enumerate_excess_slice(vertices - 1, loops, caps=caps, store=store)
    else:
        domain = enumerate_basis(
            vertices, loops, connected, one_pi, caps=caps, store=store
        )
        codomain = enumerate_basis(
            vertices - 1, loops, connected, one_pi, caps=caps, store=store
        )
    logger.debug(
        "∂_%s matrix b=%d v=%d: %d x %d", op, loops, vertices, len(codomain), len(domain)
    )
    columns = map_ordered(
        _column(OPERATORS[op], codomain), list(domain), jobs=jobs, callback=callback
    )
    entries = {(r, j): v for j, column in enumerate(columns) for r, v in column.items()}
    caps.guard(len(entries), "matrix")
    return BoundaryMatrix(op, domain, codomain, entries)
