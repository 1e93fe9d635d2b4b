# src/cohomod/modres/resolution.py

"""
Minimal projective resolutions of the trivial module over kG.

A resolution is append-only: :func:`extend_resolution` returns a new value
that shares every earlier stage (and the cache of derived matrices) with the
one it was built from.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..config import Caps
from ..errors import CapExceededError, CertificationError, ResolutionTooShortError
from ..group import PGroup
from ..linalg import DTYPE, LinearSolver, kernel_basis_array, matmul_array, rank_array, span_complement
from .modules import free_hom_matrix, free_radical

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MinimalResolution:
    """
    ``ranks[n]`` is b_n; ``differentials[n-1]`` holds the b_n generator images
    of d_n as rows of length b_{n-1}*|G|.
    """

    group: PGroup
    ranks: Tuple[int, ...]
    differentials: Tuple[np.ndarray, ...]
    _cache: Dict[Any, Any] = field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.group.p

    @property
    def length(self) -> int:
        """Highest degree n with P_n computed."""
        return len(self.ranks) - 1

    def require(self, n: int) -> None:
        if n > self.length:
            raise ResolutionTooShortError(
                f"Resolution computed through degree {self.length}, degree {n} requested"
            )

    def differential(self, n: int) -> np.ndarray:
        """Generator images of d_n (n >= 1), shape (b_n, b_{n-1}*|G|)."""
        self.require(n)
        return self.differentials[n - 1]

    def full_matrix(self, n: int) -> np.ndarray:
        """
        F_p-matrix of d_n; for n = 0 the augmentation kG -> k.
        """
        self.require(n)
        key = ("full", n)
        if key not in self._cache:
            if n == 0:
                self._cache[key] = np.ones((1, self.group.order), dtype=DTYPE)
            else:
                self._cache[key] = free_hom_matrix(self.differentials[n - 1], self.group)
        return self._cache[key]

    def solver(self, n: int) -> LinearSolver:
        key = ("solver", n)
        if key not in self._cache:
            self._cache[key] = LinearSolver(self.full_matrix(n), self.p)
        return self._cache[key]

    def cohomology_dim(self, n: int) -> int:
        self.require(n)
        return self.ranks[n]


def initial_resolution(group: PGroup) -> MinimalResolution:
    """P_0 = kG with the augmentation; nothing else computed yet."""
    return MinimalResolution(group, (1,), ())


def _next_stage(res: MinimalResolution, max_dim: int) -> np.ndarray:
    n = res.length + 1
    g = res.group
    width = res.ranks[-1] * g.order
    if width > max_dim:
        raise CapExceededError(
            f"Stage {n} needs {width} columns, above the cap of {max_dim}"
        )
    previous = res.full_matrix(n - 1)
    kernel = kernel_basis_array(previous, res.p, n_cols=width)
    rad = free_radical(kernel, g)
    picks = span_complement(rad, kernel, res.p)
    images = kernel[picks].copy()

    full = free_hom_matrix(images, g)
    if rank_array(full, res.p) != kernel.shape[0]:
        raise CertificationError(f"Stage {n} is not exact: image misses part of the kernel")
    if np.any(matmul_array(previous, full, res.p)):
        raise CertificationError(f"d_{n - 1} o d_{n} is not zero")
    res._cache[("full", n)] = full
    logger.debug(
        f"Stage {n}: kernel dim {kernel.shape[0]}, radical dim {rad.shape[0]}, b_{n} = {len(picks)}"
    )
    return images


def extend_resolution(
    res: MinimalResolution, to_degree: int, caps: Optional[Caps] = None
) -> MinimalResolution:
    """
    Extend ``res`` through degree ``to_degree``.

    Each new stage maps a free module onto K = ker d_{n-1} using lifts of a
    basis of K/rad K picked in rref order, so b_n = dim K/rad K = dim H^n.

    :raises CapExceededError: if ``to_degree`` or a matrix width exceeds the caps.
    """
    caps = caps or Caps.from_env()
    if to_degree > caps.max_degree:
        raise CapExceededError(f"Degree {to_degree} exceeds the cap {caps.max_degree}")
    if to_degree <= res.length:
        return res
    ranks = list(res.ranks)
    diffs = list(res.differentials)
    current = res
    while current.length < to_degree:
        images = _next_stage(current, caps.max_dim)
        ranks.append(images.shape[0])
        diffs.append(images)
        current = replace(current, ranks=tuple(ranks), differentials=tuple(diffs), _cache=res._cache)
    logger.info(
        f"Resolution over group of order {res.group.order} extended to degree {to_degree}; "
        f"ranks {list(current.ranks)}"
    )
    return current


def resolve(group: PGroup, to_degree: int, caps: Optional[Caps] = None) -> MinimalResolution:
    return extend_resolution(initial_resolution(group), to_degree, caps)
