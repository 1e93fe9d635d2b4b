# src/cohomod/modres/__init__.py

from .modules import (
    KGModule,
    act_free,
    augment,
    free_hom_matrix,
    free_radical,
    is_free,
    module_from_free_subspace,
    radical,
    regular_module,
    tensor,
    trivial_module,
)
from .resolution import MinimalResolution, extend_resolution, initial_resolution, resolve
from .chain_maps import (
    ChainMapLift,
    Cocycle,
    cocycle_lift,
    cup_product,
    left_multiplication,
    restriction_map,
)
from .syzygy import L_of, hom_to_fp, induced_functional, omega, omega_dim, periodicity_degree

__all__ = [
    "KGModule",
    "act_free",
    "augment",
    "free_hom_matrix",
    "free_radical",
    "is_free",
    "module_from_free_subspace",
    "radical",
    "regular_module",
    "tensor",
    "trivial_module",
    "MinimalResolution",
    "extend_resolution",
    "initial_resolution",
    "resolve",
    "ChainMapLift",
    "Cocycle",
    "cocycle_lift",
    "cup_product",
    "left_multiplication",
    "restriction_map",
    "L_of",
    "hom_to_fp",
    "induced_functional",
    "omega",
    "omega_dim",
    "periodicity_degree",
]
