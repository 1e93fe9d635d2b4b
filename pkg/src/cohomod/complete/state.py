"""
State definition for the compute-until-complete graph.

One run extends the resolution degree by degree, re-extracts the
presentation, looks for parameters and tests the completion certificate
until it fires or the caps are reached.
"""

from typing import Any, Dict, List, Optional, TypedDict

from ..config import Caps
from ..dickson import ElabRestriction
from ..group import PGroup
from ..regseq import ParameterSequence
from ..ring_extract import ExtractionState
from .certificate import CompletionVerdict

STATUS_RUNNING = "running"
STATUS_COMPLETE = "complete"
STATUS_INCOMPLETE = "incomplete"


class CompletionState(TypedDict, total=False):
    """State carried between the nodes of the completion graph."""
    # Input
    group: PGroup
    caps: Caps
    strict: Optional[bool]  # Force the strict / non-strict inequality (None = choose)
    assume_depth2: bool  # Treat depth >= 2 as known regardless of the center rank
    param_terms: Optional[List[Any]]  # User parameters as sparse terms over generator indices

    # Group data
    p_rank: int
    center_rank: int

    # Computation
    N: int  # Degree the next extension step reaches
    extraction: Optional[ExtractionState]
    elab_cache: Dict  # Extracted states of elementary abelian subgroups
    elab_data: List[ElabRestriction]
    params: Optional[ParameterSequence]
    periodicity: Optional[int]  # Least d with Omega^d k one-dimensional, rank one only

    # Outcome
    verdict: Optional[CompletionVerdict]
    history: List[dict]  # Every verdict tested, oldest first
    timings: Dict[int, float]  # Seconds spent reaching each degree
    status: str
    message: str
    report: Any  # PipelineReport, set by the finalize node
