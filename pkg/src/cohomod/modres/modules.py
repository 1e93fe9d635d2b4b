# src/cohomod/modres/modules.py

"""
kG-modules as F_p-spaces with one action matrix per group generator, plus
the array helpers for free modules (kG)^b.

A free module (kG)^b is stored as F_p^{b*|G|}; coordinate ``i*|G| + g`` is
the basis element ``g . e_i``. A kG-homomorphism out of (kG)^b is stored as
the b rows of generator images.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from ..errors import GroupMismatchError, SemanticInputError
from ..group import PGroup
from ..linalg import DTYPE, matmul_array, row_space_array, rref_array

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Free-module helpers
# ---------------------------------------------------------------------------

def act_free(v: np.ndarray, g: int, group: PGroup) -> np.ndarray:
    """Left action of element ``g`` on vectors of a free module (last axis)."""
    n = group.order
    shape = v.shape
    blocks = v.reshape(shape[:-1] + (-1, n))
    return blocks[..., group.table[group.inverses[g]]].reshape(shape)


def free_hom_matrix(rows: np.ndarray, group: PGroup) -> np.ndarray:
    """
    The F_p-matrix (c|G| x b|G|) of the kG-map sending ``e_i`` to ``rows[i]``.

    Column ``i*|G| + h`` is ``h . rows[i]``.
    """
    b, width = rows.shape
    n = group.order
    if b == 0:
        return np.zeros((width, 0), dtype=DTYPE)
    stacked = np.stack([act_free(rows, h, group) for h in range(n)], axis=1)
    return stacked.reshape(b * n, width).T.copy()


def augment(rows: np.ndarray, n: int, p: int) -> np.ndarray:
    """Apply the augmentation blockwise: (s, c*n) -> (s, c)."""
    s = rows.shape[0]
    return rows.reshape(s, -1, n).sum(axis=2) % p


def free_radical(basis: np.ndarray, group: PGroup) -> np.ndarray:
    """Basis of rad(M) = span{(s-1)v} for a submodule M of a free module given by ``basis``."""
    p = group.p
    if basis.shape[0] == 0:
        return basis
    parts = [(act_free(basis, s, group) - basis) % p for s in group.generators]
    if not parts:
        return np.zeros((0, basis.shape[1]), dtype=DTYPE)
    return row_space_array(np.vstack(parts), p)


# ---------------------------------------------------------------------------
# KGModule
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class KGModule:
    """
    A finite-dimensional kG-module.

    ``actions[k]`` is the matrix of ``group.generators[k]`` acting on column
    coordinate vectors. Modules are checked against the full multiplication
    table on construction unless ``checked`` is False, which the builders
    below pass for modules that are representations by construction.
    """

    group: PGroup
    dim: int
    actions: Tuple[np.ndarray, ...]
    _cache: Dict = field(default_factory=dict, repr=False)
    checked: bool = field(default=True, repr=False)

    def __post_init__(self):
        if len(self.actions) != len(self.group.generators):
            raise SemanticInputError(
                f"Expected {len(self.group.generators)} action matrices, got {len(self.actions)}"
            )
        for a in self.actions:
            if a.shape != (self.dim, self.dim):
                raise SemanticInputError(f"Action matrix has shape {a.shape}, module dim is {self.dim}")
        if self.checked:
            self.verify()

    @property
    def p(self) -> int:
        return self.group.p

    def element_actions(self) -> Dict[int, np.ndarray]:
        """Matrices for every group element, spread over the Cayley graph."""
        if "elements" in self._cache:
            return self._cache["elements"]
        p, t = self.p, self.group.table
        mats = {0: np.eye(self.dim, dtype=DTYPE)}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s, a in zip(self.group.generators, self.actions):
                y = int(t[s, x])
                if y not in mats:
                    mats[y] = matmul_array(a, mats[x], p)
                    queue.append(y)
        self._cache["elements"] = mats
        return mats

    def verify(self) -> None:
        """
        Check that the generator matrices define a representation.

        :raises SemanticInputError: if some relation of the group fails.
        """
        p, t = self.p, self.group.table
        mats = self.element_actions()
        for s, a in zip(self.group.generators, self.actions):
            for x, m in mats.items():
                if not np.array_equal(mats[int(t[s, x])], matmul_array(a, m, p)):
                    raise SemanticInputError(
                        f"Action matrices do not respect the group law at ({s}, {x})"
                    )

    def action_of(self, g: int) -> np.ndarray:
        return self.element_actions()[g]


def trivial_module(g: PGroup) -> KGModule:
    return KGModule(g, 1, tuple(np.eye(1, dtype=DTYPE) for _ in g.generators), checked=False)


def regular_module(g: PGroup) -> KGModule:
    n = g.order
    actions = []
    for s in g.generators:
        a = np.zeros((n, n), dtype=DTYPE)
        a[g.table[s], np.arange(n)] = 1
        actions.append(a)
    return KGModule(g, n, tuple(actions), checked=False)


def module_from_free_subspace(group: PGroup, basis: np.ndarray) -> KGModule:
    """
    The kG-module spanned by rows of ``basis`` inside a free module.

    The rows must span a G-stable subspace; they are brought to reduced
    echelon form so coordinates are read off at the pivot columns.
    """
    p = group.p
    width = basis.shape[1] if basis.ndim == 2 else 0
    if basis.size == 0:
        return KGModule(group, 0, tuple(np.zeros((0, 0), dtype=DTYPE) for _ in group.generators), checked=False)
    reduced, pivots = rref_array(basis, p)
    reduced = reduced[: len(pivots)]
    actions = []
    for s in group.generators:
        moved = act_free(reduced, s, group)
        actions.append(moved[:, pivots].T.copy() % p)
    logger.debug(f"Submodule of dimension {len(pivots)} inside a free module of dimension {width}")
    return KGModule(group, len(pivots), tuple(actions), checked=False)


def radical(m: KGModule) -> np.ndarray:
    """Basis (rows, in module coordinates) of rad M = span{(s-1)v}."""
    p = m.p
    if m.dim == 0 or not m.actions:
        return np.zeros((0, m.dim), dtype=DTYPE)
    ident = np.eye(m.dim, dtype=DTYPE)
    cols = np.hstack([(a - ident) % p for a in m.actions])
    return row_space_array(cols.T, p)


def is_free(m: KGModule) -> bool:
    """Free (= projective for p-groups) iff dim M = dim(M/rad M) * |G|."""
    tops = m.dim - radical(m).shape[0]
    return m.dim == tops * m.group.order


def tensor(a: KGModule, b: KGModule) -> KGModule:
    """Tensor product over k with diagonal action."""
    if a.group is not b.group and not (
        np.array_equal(a.group.table, b.group.table) and a.group.generators == b.group.generators
    ):
        raise GroupMismatchError("Cannot tensor modules over different groups")
    p = a.p
    actions = tuple(np.kron(x, y) % p for x, y in zip(a.actions, b.actions))
    return KGModule(a.group, a.dim * b.dim, actions, checked=False)
