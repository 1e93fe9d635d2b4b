# src/cohomod/linalg.py

"""
Dense exact linear algebra over prime fields F_p.

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``. Row reduction
pivots on the first nonzero entry of each column (scanning rows top down), so
every result downstream is reproducible bit for bit.

The public operations take :class:`FpMatrix`; the ``*_array`` helpers take a
raw array plus ``p`` and are used by the modules that keep their own arrays.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from .errors import DimensionMismatchError, SemanticInputError

logger = logging.getLogger(__name__)

DTYPE = np.int64


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or self.p < 2 or not isprime(int(self.p)):
            raise SemanticInputError(f"Field characteristic must be a prime, got {self.p!r}")

    def inverse(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(int(a), self.p - 2, self.p)

    def normalize(self, a: int) -> int:
        return int(a) % self.p


class FpMatrix:
    """
    An immutable matrix over F_p.

    Entries are stored row-major in a read-only numpy array; every entry e
    satisfies 0 <= e < p.
    """

    __slots__ = ("_data", "p")

    def __init__(self, data, p: int):
        arr = np.array(data, dtype=DTYPE, copy=True)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"FpMatrix needs a 2-dimensional array, got shape {arr.shape}")
        arr %= p
        arr.flags.writeable = False
        self._data = arr
        self.p = int(p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=DTYPE), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=DTYPE), p)

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    def to_list(self) -> List[List[int]]:
        return self._data.tolist()

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise DimensionMismatchError(f"Cannot multiply matrices over F_{self.p} and F_{other.p}")
        if self.cols != other.rows:
            raise DimensionMismatchError(f"Shape mismatch: {self.shape} @ {other.shape}")
        return FpMatrix(matmul_array(self._data, other._data, self.p), self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.shape}, entries={self.to_list()})"


@dataclass(frozen=True)
class RowEchelon:
    """Result of :func:`rref`."""

    reduced: FpMatrix
    pivots: Tuple[int, ...]
    rank: int


# ---------------------------------------------------------------------------
# Array-level kernels
# ---------------------------------------------------------------------------

def matmul_array(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 holds (p-1)^2 * inner for every desk-scale size; reduce once at the end
    return (np.asarray(a, dtype=DTYPE) @ np.asarray(b, dtype=DTYPE)) % p


def rref_array(a: np.ndarray, p: int, pivot_cols: Optional[int] = None) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form of ``a`` over F_p.

    :param pivot_cols: only the first ``pivot_cols`` columns are eligible as
        pivots; row operations still act on the full width.
    :return: (reduced array, pivot column list).
    """
    r_arr = np.array(a, dtype=DTYPE, copy=True) % p
    if r_arr.ndim != 2:
        raise DimensionMismatchError(f"rref needs a 2-dimensional array, got shape {r_arr.shape}")
    n_rows, n_cols = r_arr.shape
    limit = n_cols if pivot_cols is None else pivot_cols
    pivots: List[int] = []
    row = 0
    for col in range(limit):
        if row == n_rows:
            break
        nonzero = np.nonzero(r_arr[row:, col])[0]
        if nonzero.size == 0:
            continue
        found = row + int(nonzero[0])
        if found != row:
            r_arr[[row, found]] = r_arr[[found, row]]
        inv = pow(int(r_arr[row, col]), p - 2, p)
        if inv != 1:
            r_arr[row] = (r_arr[row] * inv) % p
        column = r_arr[:, col].copy()
        column[row] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            r_arr[targets] = (r_arr[targets] - np.outer(column[targets], r_arr[row])) % p
        pivots.append(col)
        row += 1
    return r_arr, pivots


def rank_array(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref_array(a, p)[1])


def kernel_basis_array(a: np.ndarray, p: int, n_cols: Optional[int] = None) -> np.ndarray:
    """Rows spanning the right null space of ``a`` (``a @ v == 0``)."""
    a = np.asarray(a, dtype=DTYPE)
    cols = a.shape[1] if a.ndim == 2 else (n_cols if n_cols is not None else 0)
    if a.size == 0:
        return np.eye(cols, dtype=DTYPE)
    reduced, pivots = rref_array(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=DTYPE)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-reduced[i, f]) % p
    return basis


def row_space_array(rows: np.ndarray, p: int) -> np.ndarray:
    """Nonzero rows of the rref of ``rows``: a canonical basis of their span."""
    rows = np.asarray(rows, dtype=DTYPE)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0)
    reduced, pivots = rref_array(rows, p)
    return reduced[: len(pivots)]


def independent_columns(vectors: np.ndarray, p: int) -> List[int]:
    """Indices of the rows of ``vectors`` chosen greedily (in order) as independent."""
    vectors = np.asarray(vectors, dtype=DTYPE)
    if vectors.size == 0:
        return []
    _, pivots = rref_array(vectors.T, p)
    return pivots


def span_complement(subspace: np.ndarray, candidates: np.ndarray, p: int) -> List[int]:
    """
    Indices of ``candidates`` extending ``subspace`` to a basis of the joint span.

    Candidates are taken greedily in their given order, so the choice is the
    one rref pivots make on ``[subspace | candidates]`` column-wise.
    """
    subspace = np.asarray(subspace, dtype=DTYPE)
    candidates = np.asarray(candidates, dtype=DTYPE)
    if candidates.size == 0:
        return []
    width = candidates.shape[1]
    sub = subspace.reshape(-1, width) if subspace.size else np.zeros((0, width), dtype=DTYPE)
    offset = sub.shape[0]
    pivots = independent_columns(np.vstack([sub, candidates]), p)
    return [c - offset for c in pivots if c >= offset]


class LinearSolver:
    """
    Solves ``m @ x == b`` for many right-hand sides.

    The reduction of ``m`` is computed once (rref of ``[m | I]``); each solve
    is then a matrix product. Free variables are set to zero.
    """

    def __init__(self, m: np.ndarray, p: int):
        m = np.asarray(m, dtype=DTYPE) % p
        if m.ndim != 2:
            raise DimensionMismatchError(f"LinearSolver needs a matrix, got shape {m.shape}")
        self.p = p
        self.n_rows, self.n_cols = m.shape
        augmented = np.hstack([m, np.eye(self.n_rows, dtype=DTYPE)])
        reduced, pivots = rref_array(augmented, p, pivot_cols=self.n_cols)
        self.pivots = pivots
        self.rank = len(pivots)
        self._transform = reduced[:, self.n_cols:]

    def solve_many(self, rhs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        :param rhs: matrix whose columns are right-hand sides.
        :return: (solutions as columns, boolean mask of consistent columns).
        """
        rhs = np.asarray(rhs, dtype=DTYPE)
        if rhs.ndim == 1:
            rhs = rhs.reshape(-1, 1)
        if rhs.shape[0] != self.n_rows:
            raise DimensionMismatchError(
                f"Right-hand side has {rhs.shape[0]} rows, matrix has {self.n_rows}"
            )
        y = matmul_array(self._transform, rhs, self.p)
        consistent = ~np.any(y[self.rank:] != 0, axis=0)
        x = np.zeros((self.n_cols, rhs.shape[1]), dtype=DTYPE)
        if self.rank:
            x[self.pivots] = y[: self.rank]
        return x, consistent

    def solve(self, rhs: Sequence[int]) -> Optional[np.ndarray]:
        x, ok = self.solve_many(np.asarray(rhs, dtype=DTYPE).reshape(-1, 1))
        return x[:, 0] if bool(ok[0]) else None


# ---------------------------------------------------------------------------
# FpMatrix operations
# ---------------------------------------------------------------------------

def rref(m: FpMatrix) -> RowEchelon:
    reduced, pivots = rref_array(m.data, m.p)
    return RowEchelon(FpMatrix(reduced, m.p), tuple(pivots), len(pivots))


def rank(m: FpMatrix) -> int:
    return rank_array(m.data, m.p)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Rows form a basis of ``{v : m @ v == 0}``."""
    return FpMatrix(kernel_basis_array(m.data, m.p, n_cols=m.cols).reshape(-1, m.cols), m.p)


def solve(m: FpMatrix, rhs: Iterable[int]) -> Optional[List[int]]:
    """
    One solution of ``m @ x == rhs`` (free variables zero), or None.

    :raises DimensionMismatchError: if ``len(rhs) != m.rows``.
    """
    rhs_list = [int(v) % m.p for v in rhs]
    if len(rhs_list) != m.rows:
        raise DimensionMismatchError(f"rhs has length {len(rhs_list)}, matrix has {m.rows} rows")
    x = LinearSolver(m.data, m.p).solve(rhs_list)
    return None if x is None else [int(v) for v in x]
