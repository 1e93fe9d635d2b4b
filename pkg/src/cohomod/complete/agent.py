"""
Compute-until-complete graph creation.

Builds a LangGraph state machine that alternates resolution extension,
parameter search and the completion certificate until it fires.
"""

import logging
from typing import Any, List, Optional

from langgraph.graph import END, START, StateGraph

from ..config import Caps
from ..errors import CapExceededError
from ..group import PGroup
from .nodes import extend, finalize, initialize_state, search_parameters, should_continue, test_completion
from .report import PipelineReport
from .state import CompletionState

logger = logging.getLogger(__name__)

NODES_PER_ROUND = 3


def _create_graph() -> StateGraph:
    workflow = StateGraph(CompletionState)

    workflow.add_node("initialize", initialize_state)
    workflow.add_node("extend", extend)
    workflow.add_node("search_parameters", search_parameters)
    workflow.add_node("test_completion", test_completion)
    workflow.add_node("finalize", finalize)

    workflow.add_edge(START, "initialize")
    workflow.add_edge("initialize", "extend")
    workflow.add_edge("extend", "search_parameters")
    workflow.add_edge("search_parameters", "test_completion")

    # Test -> next degree, or stop
    workflow.add_conditional_edges(
        "test_completion",
        should_continue,
        {
            "continue": "extend",
            "finish": "finalize",
        },
    )
    workflow.add_edge("finalize", END)
    return workflow


def create_completion_agent():
    """
    Create the compiled compute-until-complete graph.

    Returns:
        Compiled LangGraph graph; invoke it with a CompletionState holding at
        least ``group`` and ``caps``.

    Example:
        >>> agent = create_completion_agent()
        >>> result = agent.invoke({"group": g, "caps": Caps()}, {"recursion_limit": 100})
        >>> result["report"].complete
        True
    """
    return _create_graph().compile()


def compute_until_complete(
    g: PGroup,
    caps: Optional[Caps] = None,
    param_terms: Optional[List[Any]] = None,
    strict: Optional[bool] = None,
    assume_depth2: bool = False,
) -> PipelineReport:
    """
    Compute H*(g, F_p) degree by degree until the presentation is certified
    complete or the caps are reached.

    Args:
        g: A p-group within ``caps.max_order``.
        caps: Resource caps; read from the environment when omitted.
        param_terms: Parameters as sparse terms over generator indices
            (see ``formats.load_param_terms``); replaces the Dickson search.
        strict: Force the strict (True) or non-strict (False) inequality.
        assume_depth2: Allow the non-strict inequality without a central
            subgroup of rank two.

    Returns:
        PipelineReport; ``report.complete`` is False when the caps ran out,
        and the presentation is then only known to be right through its degree.
    """
    caps = caps or Caps.from_env()
    if g.order > caps.max_order:
        raise CapExceededError(f"Group order {g.order} exceeds the cap {caps.max_order}")
    agent = create_completion_agent()
    initial: CompletionState = {
        "group": g,
        "caps": caps,
        "strict": strict,
        "assume_depth2": assume_depth2,
        "param_terms": param_terms,
    }
    limit = NODES_PER_ROUND * (caps.max_degree + 2) + 10
    result = agent.invoke(initial, {"recursion_limit": limit})
    return result["report"]
