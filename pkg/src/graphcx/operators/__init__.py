from .algebra import (
    UNIT,
    bracket,
    coproduct,
    multiply,
    mu1,
    pair_chains,
    pair_tensors,
    pairing,
    product,
    tensor,
    tensor_map,
    tensor_product,
)
from .coalgebra import (
    cobracket,
    cobracket_tensor,
    delta1,
    mu_cobracket,
    mu_theta,
    partition_cobracket,
    separating_cobracket,
    separating_delta1,
)
from .differentials import alpha, boundary_E, boundary_H, delta_H, delta_H_full
from .report import OperatorReport, apply_operator

__all__ = [
    "UNIT",
    "OperatorReport",
    "alpha",
    "apply_operator",
    "boundary_E",
    "boundary_H",
    "bracket",
    "cobracket",
    "cobracket_tensor",
    "coproduct",
    "delta1",
    "delta_H",
    "delta_H_full",
    "mu1",
    "mu_cobracket",
    "mu_theta",
    "multiply",
    "pair_chains",
    "pair_tensors",
    "pairing",
    "partition_cobracket",
    "product",
    "separating_cobracket",
    "separating_delta1",
    "tensor",
    "tensor_map",
    "tensor_product",
]
