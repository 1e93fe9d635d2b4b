# tests/complete/test_pipeline.py

import pytest

from cohomod.complete import CompletionState, completion_test, compute_until_complete, create_completion_agent
from cohomod.complete.nodes import initialize_state, should_continue
from cohomod.complete.state import STATUS_COMPLETE, STATUS_INCOMPLETE, STATUS_RUNNING
from cohomod.config import Caps
from cohomod.errors import CapExceededError
from cohomod.formats import parameters_from_terms, parse_terms
from cohomod.ring_extract import advance, elab_restrictions, extract, presentation

# x1^2 + x1 x2 + x2^2 and x1^2 x2 + x1 x2^2 over generator indices
KLEIN_DICKSON = [
    [{"c": 1, "m": [[0, 2]]}, {"c": 1, "m": [[0, 1], [1, 1]]}, {"c": 1, "m": [[1, 2]]}],
    [{"c": 1, "m": [[0, 2], [1, 1]]}, {"c": 1, "m": [[0, 1], [1, 2]]}],
]

# ==============================================================================
# A. Graph and nodes
# ==============================================================================


class TestGraph:
    def test_create_agent(self):
        agent = create_completion_agent()
        assert agent is not None
        assert hasattr(agent, "invoke")

    def test_initialize_state(self, klein, caps):
        state: CompletionState = {"group": klein, "caps": caps}
        update = initialize_state(state)
        assert update["p_rank"] == 2
        assert update["center_rank"] == 2
        assert update["N"] == 1
        assert update["status"] == STATUS_RUNNING
        assert update["extraction"].through == 0

    def test_assume_depth_two(self, d8, caps):
        update = initialize_state({"group": d8, "caps": caps, "assume_depth2": True})
        assert update["center_rank"] == 2

    @pytest.mark.parametrize(
        "status,edge",
        [(STATUS_RUNNING, "continue"), (STATUS_COMPLETE, "finish"), (STATUS_INCOMPLETE, "finish")],
    )
    def test_should_continue(self, status, edge):
        assert should_continue({"status": status}) == edge

    def test_order_cap(self, d8):
        with pytest.raises(CapExceededError):
            compute_until_complete(d8, Caps(max_order=4))


# ==============================================================================
# B. Whole runs
# ==============================================================================


@pytest.mark.slow
class TestComputeUntilComplete:
    """Runs on small groups with known cohomology rings."""

    def test_klein(self, klein, caps):
        report = compute_until_complete(klein, caps)
        assert report.complete
        assert report.presentation.N == 3
        assert report.presentation.base.degrees == (1, 1)
        assert report.params.degrees == (2, 3)
        assert report.verdict.bound == 3
        assert report.reg == 0
        assert report.reg_checks() == {"reg_nonnegative": True, "reg_zero": True}
        assert report.audit(extra=5, caps=caps) == []

    def test_klein_strict(self, klein, caps):
        report = compute_until_complete(klein, caps, strict=True)
        assert report.complete
        assert report.presentation.N == 4

    def test_capped_before_completion(self, klein):
        report = compute_until_complete(klein, Caps(max_degree=3), strict=True)
        assert not report.complete
        assert report.status == STATUS_INCOMPLETE
        assert report.verdict.reasons == ("inequality",)
        assert report.presentation.N == 3

    @pytest.mark.parametrize("name,N,period", [("z2", 1, 1), ("z4", 2, 2)])
    def test_cyclic(self, request, caps, name, N, period):
        report = compute_until_complete(request.getfixturevalue(name), caps)
        assert report.complete
        assert report.verdict.method == "periodicity"
        assert report.presentation.N == N
        assert report.periodicity == period
        assert report.reg == 0
        assert report.reg_checks() == {"reg_nonnegative": True, "reg_zero": True}
        assert report.audit(extra=5, caps=caps) == []

    def test_quaternion(self, q8, caps):
        report = compute_until_complete(q8, caps)
        assert report.complete
        assert report.presentation.N == 6
        assert report.periodicity == 4
        assert report.presentation.base.degrees == (1, 1, 4)
        assert report.params.degrees == (4,)
        assert report.reg == 0
        assert report.reg_checks() == {"reg_nonnegative": True, "reg_zero": True}
        assert report.audit(extra=5, caps=caps) == []

    def test_dihedral(self, d8, caps):
        report = compute_until_complete(d8, caps)
        assert report.complete
        assert report.verdict.inequality == "strict"
        assert report.presentation.N == 4
        assert report.presentation.base.degrees == (1, 1, 2)
        assert report.reg == 0
        # Hilbert function against the resolution through degree 10
        assert report.audit(extra=10 - report.presentation.N, caps=caps) == []

    def test_supplied_parameters(self, klein, caps):
        terms = [parse_terms(doc) for doc in KLEIN_DICKSON]
        report = compute_until_complete(klein, caps, param_terms=terms)
        assert report.complete
        assert report.presentation.N == 3

    def test_history_and_timings(self, klein, caps):
        report = compute_until_complete(klein, caps)
        assert report.history[-1]["complete"] is True
        assert set(report.timings) == {1, 2, 3}


@pytest.mark.slow
class TestVerdictStability:
    def test_klein_stays_complete_past_first_degree(self, klein, caps):
        full = extract(klein, 7, caps)
        terms = [parse_terms(doc) for doc in KLEIN_DICKSON]
        state = extract(klein, 3, caps)
        for N in range(3, 8):
            state = advance(state, N, full.resolution)
            tau = presentation(state)
            params = parameters_from_terms(terms, tau.base)
            verdict = completion_test(
                tau, N, params, elab_restrictions(state, caps), center_rank_hint=2, caps=caps
            )
            assert verdict.complete, f"not complete at N={N}: {verdict.reasons}"
            assert verdict.bound == 3
