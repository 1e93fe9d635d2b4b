# tests/dickson/test_dickson.py

import pytest
from sympy import Poly, symbols

from cohomod.config import Caps
from cohomod.dickson import (
    ElabRestriction,
    SubgroupRestriction,
    dickson_degree,
    dickson_set,
    find_parameters,
    is_gl_invariant,
    rank_restriction_check,
    restriction_power_relation,
    search_parameters,
    verify_gl_invariance,
)
from cohomod.errors import (
    CapExceededError,
    DimensionMismatchError,
    NoSolutionError,
    ResolutionTooShortError,
    SemanticInputError,
)
from cohomod.gring import GradedPresentation, TruncatedPresentation
from cohomod.regseq import ParameterSequence


@pytest.fixture
def line_ring():
    return GradedPresentation(2, (("t", 1),))


@pytest.fixture
def klein_data(poly_xy, line_ring):
    """The identity restriction of F_2[x, y] to itself, with its three lines."""
    t, zero = line_ring.gen(0), line_ring.zero()
    lines = tuple(
        SubgroupRestriction(1, line_ring, images) for images in ((t, zero), (zero, t), (t, t))
    )
    return [ElabRestriction(2, poly_xy, (poly_xy.gen(0), poly_xy.gen(1)), lines)]


# ==============================================================================
# A. Invariants
# ==============================================================================


class TestDicksonSet:
    """Expansion of the product over the span."""

    def test_rank_one_at_two(self):
        ds = dickson_set(2, 1)
        (x1,) = ds.variables
        assert ds.invariant(1) == Poly(x1, x1, modulus=2)
        assert ds.degrees() == (1,)

    def test_rank_two_at_two(self):
        ds = dickson_set(2, 2)
        x1, x2 = ds.variables
        assert ds.invariant(1) == Poly(x1**2 + x1 * x2 + x2**2, x1, x2, modulus=2)
        assert ds.invariant(2) == Poly(x1**2 * x2 + x1 * x2**2, x1, x2, modulus=2)
        assert ds.degrees() == (2, 3)

    def test_odd_prime_uses_degree_two(self):
        ds = dickson_set(3, 1)
        (x1,) = ds.variables
        assert ds.gen_degree == 2
        assert ds.invariant(1) == Poly(x1**2, x1, modulus=3)
        assert ds.degrees() == (4,)

    def test_degree_formula(self):
        assert dickson_degree(2, 3, 1, 1) == 4
        assert dickson_degree(2, 3, 3, 1) == 7
        assert dickson_degree(3, 2, 2, 2) == 16

    def test_top_invariant_is_product_of_nonzero_vectors(self):
        ds = dickson_set(2, 2)
        assert ds.top_invariant_product() == ds.invariant(2)

    def test_to_polynomial(self, poly_xy):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        ds = dickson_set(2, 2)
        assert ds.to_polynomial(1) == x * x + x * y + y * y
        assert ds.to_polynomial(2, power=2) == (x * x * y + x * y * y) ** 2

    def test_span_cap(self):
        with pytest.raises(CapExceededError):
            dickson_set(2, 7)

    def test_rank_zero(self):
        with pytest.raises(SemanticInputError):
            dickson_set(2, 0)

    def test_not_prime(self):
        with pytest.raises(SemanticInputError):
            dickson_set(4, 1)


class TestInvariance:
    """GL(r, F_p) invariance and restriction to smaller spans."""

    @pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
    def test_invariants_are_invariant(self, p, r):
        assert verify_gl_invariance(dickson_set(p, r))

    def test_coordinate_is_not_invariant(self):
        x1, x2 = symbols("x1 x2")
        assert not is_gl_invariant(Poly(x1, x1, x2, modulus=2), 2, (x1, x2))

    @pytest.mark.parametrize("p,r,s", [(2, 2, 1), (2, 3, 1), (2, 3, 2), (3, 2, 1)])
    def test_restriction_relation(self, p, r, s):
        assert restriction_power_relation(dickson_set(p, r), s)

    def test_restriction_rank_range(self):
        with pytest.raises(SemanticInputError):
            restriction_power_relation(dickson_set(2, 2), 2)


# ==============================================================================
# B. Parameters by restriction
# ==============================================================================


class TestFindParameters:
    """Linear solve for elements with Dickson restrictions."""

    def test_identity_restriction_gives_dickson_invariants(self, poly_xy, klein_data):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        params = find_parameters(TruncatedPresentation(poly_xy, 3), klein_data, (0, 0))
        assert params.degrees == (2, 3)
        assert params.elements == (x * x + x * y + y * y, x * x * y + x * y * y)

    def test_dilation_raises_degree(self, poly_xy, klein_data):
        params = find_parameters(TruncatedPresentation(poly_xy, 4), klein_data, (1, 0))
        assert params.degrees == (4, 3)

    def test_presentation_too_short(self, poly_xy, klein_data):
        with pytest.raises(ResolutionTooShortError):
            find_parameters(TruncatedPresentation(poly_xy, 2), klein_data, (0, 0))

    def test_unreachable_target(self, poly_xy):
        x = poly_xy.gen(0)
        # both generators restrict to x: only x^2 is hit in degree two
        data = [ElabRestriction(2, poly_xy, (x, x))]
        with pytest.raises(NoSolutionError):
            find_parameters(TruncatedPresentation(poly_xy, 3), data, (0, 0))

    def test_wrong_dilation_length(self, poly_xy, klein_data):
        with pytest.raises(DimensionMismatchError):
            find_parameters(TruncatedPresentation(poly_xy, 3), klein_data, (0,))


class TestRankRestriction:
    """Vanishing on small subgroups and finite length on the maximal ones."""

    def test_dickson_parameters_pass(self, poly_xy, klein_data):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        params = ParameterSequence((x * x + x * y + y * y, x * x * y + x * y * y))
        assert rank_restriction_check(params, klein_data)

    def test_second_parameter_must_vanish_on_lines(self, poly_xy, klein_data):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        params = ParameterSequence((x * x + x * y + y * y, x * x * x))
        assert not rank_restriction_check(params, klein_data)

    def test_needs_data(self, poly_xy):
        with pytest.raises(SemanticInputError):
            rank_restriction_check(ParameterSequence((poly_xy.gen(0),)), [])

    def test_search(self, poly_xy, klein_data):
        params = search_parameters(TruncatedPresentation(poly_xy, 3), klein_data, Caps())
        assert params is not None
        assert params.degrees == (2, 3)

    def test_search_fails_when_too_short(self, poly_xy, klein_data):
        assert search_parameters(TruncatedPresentation(poly_xy, 2), klein_data, Caps(max_dilation=1)) is None
