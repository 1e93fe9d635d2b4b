"""
Node functions for the compute-until-complete graph.

    initialize -> extend -> search_parameters -> test_completion
                    ^                                  |
                    +------------- continue -----------+--- finish -> finalize

``extend`` reaches the degree in ``state["N"]``; ``test_completion`` either
stops the loop or schedules the next degree, jumping straight to the degree
the certificate asked for when it is known.
"""

import logging
import time
from typing import Any, Dict

from ..errors import CapExceededError, CertificationError, NoSolutionError, NotHSOPError, ResolutionTooShortError
from ..dickson import search_parameters as dickson_search
from ..formats import parameters_from_terms, terms_max_index
from ..group import center_rank, maximal_elementary_abelians
from ..modres import extend_resolution, initial_resolution, periodicity_degree
from ..regseq import MODE_CERTIFIED, analyze_ring
from ..ring_extract import advance, elab_restrictions, initial_state, presentation
from .certificate import INEQUALITY_STRICT, CompletionVerdict, completion_test
from .report import PipelineReport
from .state import STATUS_COMPLETE, STATUS_INCOMPLETE, STATUS_RUNNING, CompletionState

logger = logging.getLogger(__name__)


def _stop(message: str) -> Dict[str, Any]:
    logger.warning(message)
    return {"status": STATUS_INCOMPLETE, "message": message}


def _schedule(state: CompletionState, wanted: int) -> Dict[str, Any]:
    """Move on to ``wanted`` (at least one degree further), or stop at the degree cap."""
    caps = state["caps"]
    current = state["extraction"].through
    target = max(current + 1, wanted)
    if target > caps.max_degree:
        if current < caps.max_degree:
            target = caps.max_degree
        else:
            return _stop(f"Degree cap {caps.max_degree} reached before completion")
    return {"N": target}


def initialize_state(state: CompletionState) -> Dict[str, Any]:
    """Node: group invariants and an empty extraction."""
    g = state["group"]
    classes = maximal_elementary_abelians(g)
    z_rank = 2 if state.get("assume_depth2") else center_rank(g)
    logger.info(
        f"[INITIALIZE] Group of order {g.order}, p={g.p}, p-rank {classes.p_rank}, "
        f"{len(classes)} maximal elementary abelian class(es), center rank {center_rank(g)}"
    )
    return {
        "p_rank": classes.p_rank,
        "center_rank": z_rank,
        "N": 1,
        "extraction": initial_state(initial_resolution(g)),
        "elab_cache": {},
        "elab_data": [],
        "params": None,
        "periodicity": None,
        "verdict": None,
        "history": [],
        "timings": {},
        "status": STATUS_RUNNING,
        "message": "",
    }


def extend(state: CompletionState) -> Dict[str, Any]:
    """Node: extend the resolution and the presentation through degree N."""
    caps = state["caps"]
    target = state["N"]
    extraction = state["extraction"]
    start = time.perf_counter()
    try:
        res = extend_resolution(extraction.resolution, target, caps)
        extraction = advance(extraction, target, res)
        elab_data = elab_restrictions(extraction, caps, state["elab_cache"])
    except CapExceededError as e:
        return _stop(f"Caps reached while extending to degree {target}: {e}")
    timings = dict(state.get("timings", {}))
    timings[target] = time.perf_counter() - start
    logger.info(
        f"[EXTEND] Through degree {target}: {len(extraction.generators)} generator(s), "
        f"{len(extraction.relations)} relation(s)"
    )
    return {"extraction": extraction, "elab_data": elab_data, "timings": timings}


def search_parameters(state: CompletionState) -> Dict[str, Any]:
    """Node: parameters for the current presentation, user-supplied ones first."""
    if state.get("status") != STATUS_RUNNING:
        return {}
    extraction = state["extraction"]
    tau = presentation(extraction)
    terms = state.get("param_terms")
    if terms:
        if terms_max_index(terms) >= len(extraction.generators):
            logger.info("[SEARCH] Supplied parameters refer to generators not found yet")
            return {"params": None}
        params = parameters_from_terms(terms, tau.base)
        if any(n > tau.N for n in params.degrees):
            return {"params": None}
        return {"params": params}
    params = dickson_search(tau, state["elab_data"], state["caps"])
    if params is None:
        logger.info(f"[SEARCH] No parameters through degree {tau.N}")
    return {"params": params}


def test_completion(state: CompletionState) -> Dict[str, Any]:
    """Node: run the certificate (or the periodicity test in rank one)."""
    if state.get("status") != STATUS_RUNNING:
        return {}
    extraction = state["extraction"]
    N = extraction.through
    if state["p_rank"] == 1:
        return _test_periodic(state, N)

    params = state.get("params")
    if params is None:
        return _schedule(state, N + 1)
    verdict = completion_test(
        presentation(extraction),
        N,
        params,
        state["elab_data"],
        center_rank_hint=state["center_rank"],
        strict=state.get("strict"),
        caps=state["caps"],
    )
    update = {"verdict": verdict, "history": list(state.get("history", [])) + [verdict.as_dict()]}
    if verdict.complete:
        logger.info(f"[TEST] Complete at degree {N}")
        update.update(status=STATUS_COMPLETE, message=f"Complete at degree {N}")
        return update
    wanted = verdict.required_degree() or N + 1
    update.update(_schedule(state, wanted))
    return update


def _test_periodic(state: CompletionState, N: int) -> Dict[str, Any]:
    d = periodicity_degree(state["extraction"].resolution)
    if d is None:
        return _schedule(state, N + 1)
    needed = max(d, 2 * d - 2)
    if N < needed:
        return {"periodicity": d, **_schedule(state, needed)}
    verdict = CompletionVerdict(
        complete=True,
        N=N,
        alpha=float("-inf"),
        r=1,
        param_degrees=(d,),
        bound=needed,
        inequality=INEQUALITY_STRICT,
        method="periodicity",
    )
    logger.info(f"[TEST] Rank one, period {d}: complete at degree {N}")
    return {
        "periodicity": d,
        "verdict": verdict,
        "history": list(state.get("history", [])) + [verdict.as_dict()],
        "status": STATUS_COMPLETE,
        "message": f"Periodic of period {d}, complete at degree {N}",
    }


def should_continue(state: CompletionState) -> str:
    """Conditional edge: loop while the run is neither complete nor capped."""
    return "continue" if state.get("status") == STATUS_RUNNING else "finish"


def finalize(state: CompletionState) -> Dict[str, Any]:
    """Node: analyze the final presentation and assemble the PipelineReport."""
    extraction = state["extraction"]
    tau = presentation(extraction)
    verdict = state.get("verdict")
    params = state.get("params")
    analysis = verdict.analysis if verdict is not None else None
    if analysis is None and params is not None and state.get("status") == STATUS_COMPLETE:
        try:
            analysis = analyze_ring(tau.base, params, mode=MODE_CERTIFIED, caps=state["caps"])
        except (CapExceededError, NotHSOPError, CertificationError, NoSolutionError, ResolutionTooShortError) as e:
            logger.warning(f"[FINALIZE] Final ring analysis unavailable: {e}")
    report = PipelineReport(
        presentation=tau,
        verdict=verdict,
        ranks=tuple(extraction.resolution.ranks[: extraction.through + 1]),
        params=params,
        p_rank=state["p_rank"],
        center_rank=state["center_rank"],
        status=state.get("status", STATUS_INCOMPLETE),
        message=state.get("message", ""),
        periodicity=state.get("periodicity"),
        analysis=analysis,
        history=tuple(state.get("history", [])),
        timings=dict(state.get("timings", {})),
        extraction=extraction,
    )
    if analysis is not None and analysis.report.reg_exact is not None:
        checks = report.reg_checks()
        if not checks["reg_nonnegative"]:
            logger.error(f"[FINALIZE] Negative regularity {analysis.report.reg_exact}")
        elif not checks["reg_zero"]:
            logger.warning(f"[FINALIZE] Regularity {analysis.report.reg_exact} is not zero")
    logger.info(f"[FINALIZE] {report.status}: {report.message}")
    return {"report": report}
