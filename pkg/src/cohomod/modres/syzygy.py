# src/cohomod/modres/syzygy.py

"""
Syzygy modules Omega^n k, the modules L_zeta = ker(zeta-hat: Omega^n k -> k),
degree-one classes as homomorphisms, and periodicity detection.
"""

import logging
from typing import Optional

import numpy as np

from ..errors import SemanticInputError
from ..linalg import DTYPE, kernel_basis_array, rank_array, row_space_array
from .chain_maps import Cocycle
from .modules import KGModule, module_from_free_subspace, trivial_module
from .resolution import MinimalResolution

logger = logging.getLogger(__name__)


def omega_basis(n: int, res: MinimalResolution) -> np.ndarray:
    """Reduced-echelon basis of Omega^n k = ker d_{n-1} inside P_{n-1} (n >= 1)."""
    res.require(n - 1)
    width = res.ranks[n - 1] * res.group.order
    kernel = kernel_basis_array(res.full_matrix(n - 1), res.p, n_cols=width)
    return row_space_array(kernel, res.p)


def omega(n: int, res: MinimalResolution) -> KGModule:
    if n == 0:
        return trivial_module(res.group)
    return module_from_free_subspace(res.group, omega_basis(n, res))


def omega_dim(n: int, res: MinimalResolution) -> int:
    if n == 0:
        return 1
    return res.ranks[n - 1] * res.group.order - rank_array(res.full_matrix(n - 1), res.p)


def induced_functional(z: Cocycle, res: MinimalResolution) -> np.ndarray:
    """
    Values of zeta-hat on the basis of :func:`omega_basis`.

    Each basis vector w is pulled back along d_n (w = d_n v) and evaluated
    as z(v); the choice of v does not matter because ker d_n lies in the radical.
    """
    n = z.degree
    if n == 0:
        return z.as_array() % z.p
    res.require(n)
    basis = omega_basis(n, res)
    v, ok = res.solver(n).solve_many(basis.T)
    if not bool(np.all(ok)):
        raise SemanticInputError(f"Omega^{n} basis is not in the image of d_{n}")
    order = res.group.order
    values = v.reshape(res.ranks[n], order, -1).sum(axis=1) % res.p
    return (z.as_array() @ values) % res.p


def L_of(z: Cocycle, res: MinimalResolution) -> KGModule:
    """
    L_zeta: kernel of zeta-hat on Omega^n k.

    :raises SemanticInputError: if ``z`` is zero (zeta-hat not surjective).
    """
    if z.is_zero():
        raise SemanticInputError("L_zeta needs a nonzero class")
    phi = induced_functional(z, res)
    if z.degree == 0:
        return module_from_free_subspace(res.group, np.zeros((0, res.group.order), dtype=DTYPE))
    basis = omega_basis(z.degree, res)
    coeffs = kernel_basis_array(phi.reshape(1, -1), res.p)
    module = module_from_free_subspace(res.group, (coeffs @ basis) % res.p)
    logger.debug(f"L_zeta for a degree-{z.degree} class has dimension {module.dim}")
    return module


def hom_to_fp(z: Cocycle, res: MinimalResolution) -> np.ndarray:
    """
    A degree-one class as the homomorphism G -> F_p, h -> zeta-hat(h - 1).

    :return: array of values indexed by group element.
    """
    if z.degree != 1:
        raise SemanticInputError(f"Only degree-one classes are homomorphisms, got degree {z.degree}")
    res.require(1)
    order = res.group.order
    diffs = np.zeros((order, order), dtype=DTYPE)
    diffs[np.arange(order), np.arange(order)] = 1
    diffs[:, 0] = (diffs[:, 0] - 1) % res.p
    v, ok = res.solver(1).solve_many(diffs.T)
    if not bool(np.all(ok)):
        raise SemanticInputError("h - 1 is not in the image of d_1")
    values = v.reshape(res.ranks[1], order, -1).sum(axis=1) % res.p
    return (z.as_array() @ values) % res.p


def periodicity_degree(res: MinimalResolution) -> Optional[int]:
    """Least d >= 1 with dim Omega^d k = 1 (then Omega^d k = k), within the computed stages."""
    for d in range(1, res.length + 1):
        if omega_dim(d, res) == 1:
            logger.info(f"Omega^{d} k is one-dimensional: cohomology is periodic of period {d}")
            return d
    return None
