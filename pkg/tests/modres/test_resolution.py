# tests/modres/test_resolution.py

import numpy as np
import pytest

from cohomod.config import Caps
from cohomod.errors import CapExceededError, GroupMismatchError, ResolutionTooShortError, SemanticInputError
from cohomod.linalg import matmul_array
from cohomod.modres import (
    KGModule,
    extend_resolution,
    initial_resolution,
    is_free,
    radical,
    regular_module,
    resolve,
    tensor,
    trivial_module,
)

# ==============================================================================
# A. Modules
# ==============================================================================


class TestModules:
    """kG-modules, radicals and freeness."""

    def test_regular_module_is_free(self, d8):
        m = regular_module(d8)
        m.verify()
        assert is_free(m)

    def test_trivial_module_is_not_free(self, klein):
        assert not is_free(trivial_module(klein))

    def test_radical_of_regular_module(self, z4):
        # kG for cyclic G of order 4 is uniserial: the radical has codimension one
        assert radical(regular_module(z4)).shape[0] == 3

    def test_tensor_with_free_is_free(self, klein):
        m = tensor(regular_module(klein), trivial_module(klein))
        assert m.dim == 4
        assert is_free(m)

    def test_tensor_group_mismatch(self, klein, z4):
        with pytest.raises(GroupMismatchError):
            tensor(trivial_module(klein), trivial_module(z4))

    def test_action_count_checked(self, klein):
        with pytest.raises(SemanticInputError):
            KGModule(klein, 1, (np.eye(1, dtype=np.int64),))

    def test_construction_rejects_bad_action(self, z2):
        # singular, so not a representation
        with pytest.raises(SemanticInputError):
            KGModule(z2, 2, (np.array([[1, 1], [0, 0]], dtype=np.int64),))

    def test_construction_rejects_wrong_order(self, z4):
        # an involution is a representation of Z/4; a 3-cycle is not, its order does not divide 4
        swap = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=np.int64)
        KGModule(z4, 3, (swap,))
        rotate = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.int64)
        with pytest.raises(SemanticInputError):
            KGModule(z4, 3, (rotate,))

    def test_unchecked_module_verified_on_demand(self, z2):
        bad = KGModule(z2, 2, (np.array([[1, 1], [0, 0]], dtype=np.int64),), checked=False)
        with pytest.raises(SemanticInputError):
            bad.verify()

    def test_permutation_module_accepted(self, z2):
        m = KGModule(z2, 2, (np.array([[0, 1], [1, 0]], dtype=np.int64),))
        assert is_free(m)


# ==============================================================================
# B. Minimal resolutions
# ==============================================================================


class TestMinimalResolution:
    """Ranks b_n = dim H^n(G, F_p) and exactness."""

    @pytest.mark.parametrize(
        "name,expected",
        [
            ("z2", [1, 1, 1, 1, 1]),
            ("z4", [1, 1, 1, 1, 1]),
            ("klein", [1, 2, 3, 4, 5]),
            ("d8", [1, 2, 3, 4, 5]),
            ("q8", [1, 2, 2, 1, 1]),
            ("z3", [1, 1, 1, 1, 1]),
        ],
    )
    def test_ranks(self, request, caps, name, expected):
        res = resolve(request.getfixturevalue(name), 4, caps)
        assert list(res.ranks) == expected

    def test_complex_property(self, d8, caps):
        res = resolve(d8, 4, caps)
        for n in range(1, 5):
            assert not np.any(matmul_array(res.full_matrix(n - 1), res.full_matrix(n), 2))

    def test_extension_keeps_earlier_stages(self, klein, caps):
        short = resolve(klein, 2, caps)
        longer = extend_resolution(short, 4, caps)
        assert longer.ranks[:3] == short.ranks
        assert all(np.array_equal(a, b) for a, b in zip(short.differentials, longer.differentials))

    def test_extension_is_noop_when_long_enough(self, klein, caps):
        res = resolve(klein, 3, caps)
        assert extend_resolution(res, 2, caps) is res

    def test_require(self, z2):
        res = initial_resolution(z2)
        assert res.length == 0
        with pytest.raises(ResolutionTooShortError):
            res.differential(1)

    def test_degree_cap(self, klein):
        with pytest.raises(CapExceededError):
            resolve(klein, 5, Caps(max_degree=4))

    def test_width_cap(self, klein):
        with pytest.raises(CapExceededError):
            resolve(klein, 4, Caps(max_dim=10))
