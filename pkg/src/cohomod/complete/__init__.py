from .agent import compute_until_complete, create_completion_agent
from .certificate import (
    INEQUALITY_NONSTRICT,
    INEQUALITY_STRICT,
    CompletionVerdict,
    alpha_from_analysis,
    completion_test,
    images_form_hsop,
    projected_degree,
)
from .report import PipelineReport
from .state import CompletionState

__all__ = [
    "compute_until_complete",
    "create_completion_agent",
    "INEQUALITY_NONSTRICT",
    "INEQUALITY_STRICT",
    "CompletionVerdict",
    "alpha_from_analysis",
    "completion_test",
    "images_form_hsop",
    "projected_degree",
    "PipelineReport",
    "CompletionState",
]
