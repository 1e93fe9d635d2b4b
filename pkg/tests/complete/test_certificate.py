# tests/complete/test_certificate.py

import pytest

from cohomod.complete import (
    INEQUALITY_NONSTRICT,
    INEQUALITY_STRICT,
    alpha_from_analysis,
    completion_test,
    images_form_hsop,
    projected_degree,
)
from cohomod.dickson import ElabRestriction
from cohomod.errors import TheoremInapplicableError
from cohomod.gring import NEG_INF, TruncatedPresentation
from cohomod.regseq import (
    MODE_CERTIFIED,
    ClassFlags,
    FilterType,
    LocalCohomologyReport,
    ParameterSequence,
    RingAnalysis,
)


@pytest.fixture
def dickson_params(poly_xy):
    x, y = poly_xy.gen(0), poly_xy.gen(1)
    return ParameterSequence((x * x + x * y + y * y, x * x * y + x * y * y))


@pytest.fixture
def identity_data(poly_xy):
    return [ElabRestriction(2, poly_xy, (poly_xy.gen(0), poly_xy.gen(1)))]


def _analysis(a_bound, depth, a_exact=None):
    t = FilterType(tuple(a_bound), MODE_CERTIFIED)
    report = LocalCohomologyReport(a_bound=t.d, a_max_exact=None, reg_exact=None, depth=depth, certified=True)
    return RingAnalysis(
        measured=t,
        envelope=t,
        flags=ClassFlags(True, False, False, False),
        report=report,
        bound=8,
        mode=MODE_CERTIFIED,
        a_exact=a_exact,
    )


# ==============================================================================
# A. Pieces of the certificate
# ==============================================================================


class TestAlpha:
    """alpha = max over i <= r - 2 of (a^i + i)."""

    def test_depth_reaches_r_minus_one(self):
        assert alpha_from_analysis(_analysis((1, 0, -1), depth=1), 2) == NEG_INF

    def test_bound_used_without_exact_values(self):
        assert alpha_from_analysis(_analysis((1, 0, -1), depth=0), 2) == 1

    def test_exact_values_preferred(self):
        assert alpha_from_analysis(_analysis((1, 0, -1), depth=0, a_exact=(0, 0, -1)), 2) == 0

    def test_rank_three(self):
        # a^0 bounded by 2, a^1 by 1: alpha = max(2 + 0, 1 + 1)
        assert alpha_from_analysis(_analysis((2, 1, 0, -1), depth=0), 3) == 2


class TestHelpers:
    def test_projected_degree(self, dickson_params):
        assert projected_degree(dickson_params) == 4
        assert projected_degree((4,)) == 4

    def test_images_form_hsop(self, dickson_params, identity_data):
        assert images_form_hsop(dickson_params, identity_data)

    def test_collapsed_images(self, poly_xy, dickson_params):
        x = poly_xy.gen(0)
        # c_{2,0} vanishes once both generators restrict to x
        assert not images_form_hsop(dickson_params, [ElabRestriction(2, poly_xy, (x, x))])


# ==============================================================================
# B. The verdict
# ==============================================================================


class TestCompletionTest:
    """The inequality on a polynomial ring in two variables."""

    def test_complete_with_central_rank_two(self, poly_xy, dickson_params, identity_data):
        verdict = completion_test(TruncatedPresentation(poly_xy, 3), 3, dickson_params, identity_data, center_rank_hint=2)
        assert verdict.complete
        assert verdict.inequality == INEQUALITY_NONSTRICT
        assert verdict.alpha == NEG_INF
        assert verdict.bound == 3
        assert verdict.reasons == ()

    def test_too_early(self, poly_xy, dickson_params, identity_data):
        verdict = completion_test(TruncatedPresentation(poly_xy, 3), 2, dickson_params, identity_data, center_rank_hint=2)
        assert not verdict.complete
        assert verdict.reasons == ("inequality",)
        assert verdict.required_degree() == 3

    def test_strict_needs_one_more_degree(self, poly_xy, dickson_params, identity_data):
        at3 = completion_test(TruncatedPresentation(poly_xy, 3), 3, dickson_params, identity_data, strict=True)
        assert not at3.complete
        assert at3.inequality == INEQUALITY_STRICT
        assert at3.required_degree() == 4
        at4 = completion_test(TruncatedPresentation(poly_xy, 4), 4, dickson_params, identity_data, strict=True)
        assert at4.complete

    def test_non_strict_refused_without_central_rank(self, poly_xy, dickson_params, identity_data):
        verdict = completion_test(
            TruncatedPresentation(poly_xy, 3), 3, dickson_params, identity_data, center_rank_hint=1, strict=False
        )
        assert verdict.inequality == INEQUALITY_STRICT
        assert not verdict.complete

    def test_not_a_system_of_parameters(self, poly_xy, dickson_params):
        x = poly_xy.gen(0)
        verdict = completion_test(
            TruncatedPresentation(poly_xy, 3), 3, dickson_params, [ElabRestriction(2, poly_xy, (x, x))], center_rank_hint=2
        )
        assert not verdict.complete
        assert verdict.bound is None
        assert "system of parameters" in verdict.reasons[0]

    def test_as_dict(self, poly_xy, dickson_params, identity_data):
        doc = completion_test(TruncatedPresentation(poly_xy, 3), 3, dickson_params, identity_data, center_rank_hint=2).as_dict()
        assert doc["alpha"] == "-inf"
        assert doc["param_degrees"] == [2, 3]
        assert doc["method"] == "certificate"

    def test_rank_one_rejected(self, poly_xy, identity_data):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        with pytest.raises(TheoremInapplicableError):
            completion_test(TruncatedPresentation(poly_xy, 3), 3, ParameterSequence((x * x + y * y,)), identity_data)

    def test_degree_one_parameter_rejected(self, poly_xy, identity_data):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        with pytest.raises(TheoremInapplicableError):
            completion_test(TruncatedPresentation(poly_xy, 3), 3, ParameterSequence((x, y)), identity_data)
