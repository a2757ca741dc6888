from .basis import (
    DEFAULT_CAPS,
    BasisSlice,
    Caps,
    brute_force_basis,
    enumerate_basis,
    enumerate_excess_slice,
    trivalent_bound,
)
from .chains import (
    Chain,
    SymChain,
    TensorChain,
    add,
    bilinear,
    coefficient,
    koszul,
    linear,
    monomial,
    normalize,
    scale,
)
from .store import BasisStore

__all__ = [
    "DEFAULT_CAPS",
    "BasisSlice",
    "BasisStore",
    "Caps",
    "Chain",
    "SymChain",
    "TensorChain",
    "add",
    "bilinear",
    "brute_force_basis",
    "coefficient",
    "enumerate_basis",
    "enumerate_excess_slice",
    "koszul",
    "linear",
    "monomial",
    "normalize",
    "scale",
    "trivalent_bound",
]
