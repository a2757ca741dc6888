"""Exact rank, kernels and solutions for sparse integer matrices."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from sympy import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from graphcx.errors import VerificationError

logger = logging.getLogger(__name__)

SparseRows = Sequence[Mapping[int, int]]
DEFAULT_PRIMES = (2_147_483_647, 1_000_000_007)


def bareiss_rank(rows: SparseRows) -> int:
    """Rank by fraction-free elimination on sparse rows.

    Every remaining row is updated at every step so each division by the
    previous pivot is exact; an inexact one raises VerificationError.
    """
    pending = [dict(row) for row in rows if row]
    previous = 1
    rank = 0
    while pending:
        index = min(range(len(pending)), key=lambda i: (len(pending[i]), min(pending[i])))
        pivot_row = pending.pop(index)
        column = min(pivot_row)
        pivot = pivot_row[column]
        updated = []
        for row in pending:
            factor = row.get(column, 0)
            new = {}
            for col in row.keys() | pivot_row.keys():
                numerator = pivot * row.get(col, 0) - factor * pivot_row.get(col, 0)
                quotient, remainder = divmod(numerator, previous)
                if remainder:
                    raise VerificationError(
                        f"inexact division of {numerator} by {previous}"
                    )
                if quotient:
                    new[col] = quotient
            if new:
                updated.append(new)
        pending = updated
        previous = pivot
        rank += 1
    return rank


def to_domain_matrix(rows: SparseRows, shape: tuple[int, int], domain=ZZ) -> DomainMatrix:
    data = {
        r: {c: domain(v) for c, v in row.items() if v}
        for r, row in enumerate(rows)
        if row
    }
    return DomainMatrix(data, shape, domain)


def modular_rank(rows: SparseRows, shape: tuple[int, int], prime: int) -> int:
    """Rank over GF(prime); a lower bound on the rational rank."""
    if not shape[0] or not shape[1]:
        return 0
    return to_domain_matrix(rows, shape).convert_to(GF(prime)).rank()


def rank(
    rows: SparseRows, shape: tuple[int, int], primes: Iterable[int] = DEFAULT_PRIMES
) -> int:
    """Exact rank; every modular probe has to agree with elimination."""
    exact = bareiss_rank(rows)
    for prime in primes:
        probe = modular_rank(rows, shape, prime)
        logger.debug("rank probe mod %d: %d (exact %d)", prime, probe, exact)
        if probe != exact:
            raise VerificationError(
                f"rank mod {prime} is {probe}, elimination gives {exact}"
            )
    return exact


def _fraction(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def primitive(vector: Sequence[Fraction]) -> list[int]:
    """Scale to coprime integers with the first non-zero entry positive."""
    scale = lcm(*(x.denominator for x in vector)) if vector else 1
    integers = [int(x * scale) for x in vector]
    divisor = gcd(*integers) or 1
    integers = [x // divisor for x in integers]
    lead = next((x for x in integers if x), 1)
    return [-x for x in integers] if lead < 0 else integers


def nullspace(rows: SparseRows, shape: tuple[int, int]) -> list[list[int]]:
    """Primitive integer basis of the rational kernel."""
    n_rows, n_cols = shape
    if not n_cols:
        return []
    if not n_rows:
        return [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
    kernel = to_domain_matrix(rows, shape).convert_to(QQ).nullspace()
    return [primitive([_fraction(x) for x in vector]) for vector in kernel.to_list()]


def solve(
    rows: SparseRows, shape: tuple[int, int], target: Mapping[int, Fraction]
) -> Optional[list[Fraction]]:
    """A rational solution of M a = target, or None when target is not in
    the column space. Free variables are set to zero."""
    n_rows, n_cols = shape
    if not any(target.values()):
        return [Fraction(0)] * n_cols
    if not n_rows:
        return None
    augmented: list[dict[int, Fraction]] = [
        {c: Fraction(v) for c, v in row.items()} for row in rows
    ]
    augmented.extend({} for _ in range(n_rows - len(augmented)))
    for r, value in target.items():
        if value:
            augmented[r][n_cols] = Fraction(value)
    data = {
        r: {c: QQ(v.numerator, v.denominator) for c, v in row.items() if v}
        for r, row in enumerate(augmented)
        if row
    }
    reduced, pivots = DomainMatrix(data, (n_rows, n_cols + 1), QQ).rref()
    if n_cols in pivots:
        return None
    table = reduced.to_list()
    solution = [Fraction(0)] * n_cols
    for r, col in enumerate(pivots):
        solution[col] = _fraction(table[r][n_cols])
    return solution
