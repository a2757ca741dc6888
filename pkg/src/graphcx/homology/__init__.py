from .cycles import (
    HomologyRow,
    betti,
    check_cycle_triviality,
    check_triviality,
    cycle_basis,
    cycle_pairs,
    euler_characteristic,
    homology_table,
    is_boundary,
    kernel_basis,
    matrix_rank,
)
from .linalg import (
    DEFAULT_PRIMES,
    bareiss_rank,
    modular_rank,
    nullspace,
    primitive,
    rank,
    solve,
)
from .matrices import BoundaryMatrix, boundary_matrix

__all__ = [
    "DEFAULT_PRIMES",
    "BoundaryMatrix",
    "HomologyRow",
    "bareiss_rank",
    "betti",
    "boundary_matrix",
    "check_cycle_triviality",
    "check_triviality",
    "cycle_basis",
    "cycle_pairs",
    "euler_characteristic",
    "homology_table",
    "is_boundary",
    "kernel_basis",
    "matrix_rank",
    "modular_rank",
    "nullspace",
    "primitive",
    "rank",
    "solve",
]
