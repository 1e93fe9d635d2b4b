# tests/linalg/test_linalg.py

import numpy as np
import pytest

from cohomod.errors import DimensionMismatchError, SemanticInputError
from cohomod.linalg import (
    FpMatrix,
    LinearSolver,
    PrimeField,
    kernel_basis,
    kernel_basis_array,
    matmul_array,
    rank,
    rref,
    solve,
    span_complement,
)


class TestPrimeField:
    """PrimeField validation and arithmetic."""

    def test_inverse(self):
        f = PrimeField(7)
        assert all(a * f.inverse(a) % 7 == 1 for a in range(1, 7))

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            PrimeField(5).inverse(0)

    @pytest.mark.parametrize("p", [0, 1, 4, 9])
    def test_non_prime_rejected(self, p):
        with pytest.raises(SemanticInputError):
            PrimeField(p)

    def test_normalize(self):
        assert PrimeField(3).normalize(-1) == 2


class TestFpMatrix:
    """FpMatrix construction, products and equality."""

    def test_entries_reduced(self):
        m = FpMatrix([[3, -1], [5, 2]], 3)
        assert m.to_list() == [[0, 2], [2, 2]]

    def test_immutable(self):
        m = FpMatrix([[1, 0]], 2)
        with pytest.raises(ValueError):
            m.data[0, 0] = 0

    def test_matmul(self):
        a = FpMatrix([[1, 1], [0, 1]], 2)
        assert a @ a == FpMatrix.identity(2, 2)

    def test_matmul_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            FpMatrix([[1, 1]], 2) @ FpMatrix([[1, 1]], 2)

    def test_matmul_prime_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            FpMatrix([[1]], 2) @ FpMatrix([[1]], 3)

    def test_one_dimensional_data_rejected(self):
        with pytest.raises(DimensionMismatchError):
            FpMatrix([1, 2, 3], 5)

    def test_hash_matches_equality(self):
        assert hash(FpMatrix([[1, 2]], 5)) == hash(FpMatrix([[6, 7]], 5))


class TestRowReduction:
    """rref, rank and kernels."""

    def test_rref_full_rank(self):
        result = rref(FpMatrix([[1, 2], [3, 4]], 5))
        assert result.rank == 2
        assert result.pivots == (0, 1)
        assert result.reduced == FpMatrix.identity(2, 5)

    def test_rref_rank_deficient(self):
        result = rref(FpMatrix([[1, 1], [1, 1]], 2))
        assert result.rank == 1
        assert result.reduced.to_list() == [[1, 1], [0, 0]]

    def test_rank_of_zero_matrix(self):
        assert rank(FpMatrix.zeros(3, 4, 3)) == 0

    def test_kernel_basis(self):
        m = FpMatrix([[1, 1, 0], [0, 1, 1]], 2)
        k = kernel_basis(m)
        assert k.shape == (1, 3)
        assert k.to_list() == [[1, 1, 1]]
        assert not np.any((m @ FpMatrix(k.data.T, 2)).data)

    def test_kernel_of_empty_matrix_is_everything(self):
        assert np.array_equal(kernel_basis_array(np.zeros((0, 3)), 2, n_cols=3), np.eye(3))

    def test_kernel_rank_nullity(self):
        rng = np.random.default_rng(7)
        a = rng.integers(0, 3, size=(4, 7))
        k = kernel_basis_array(a, 3)
        assert k.shape[0] + rank(FpMatrix(a, 3)) == 7
        assert not np.any(matmul_array(a, k.T, 3))


class TestSolving:
    """LinearSolver and solve()."""

    def test_solve_consistent(self):
        m = FpMatrix([[1, 2], [0, 1]], 3)
        x = solve(m, [1, 2])
        assert x is not None
        assert (m @ FpMatrix([[v] for v in x], 3)).to_list() == [[1], [2]]

    def test_solve_inconsistent(self):
        assert solve(FpMatrix([[1, 1], [1, 1]], 2), [0, 1]) is None

    def test_solve_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve(FpMatrix([[1, 0]], 2), [1, 0])

    def test_solve_many_mask(self):
        solver = LinearSolver(np.array([[1, 0], [0, 0]]), 2)
        x, ok = solver.solve_many(np.array([[1, 1], [0, 1]]))
        assert ok.tolist() == [True, False]
        assert x[:, 0].tolist() == [1, 0]

    def test_free_variables_are_zero(self):
        x = LinearSolver(np.array([[1, 1]]), 2).solve([1])
        assert x.tolist() == [1, 0]


class TestSpanComplement:
    """Greedy extension of a subspace by candidate vectors."""

    def test_extends_in_order(self):
        sub = np.array([[1, 0, 0]])
        candidates = np.array([[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]])
        assert span_complement(sub, candidates, 2) == [1, 3]

    def test_empty_subspace(self):
        candidates = np.eye(2, dtype=np.int64)
        assert span_complement(np.zeros((0, 2)), candidates, 5) == [0, 1]
