# src/cohomod/complete/report.py

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..config import Caps
from ..gring import TruncatedPresentation
from ..regseq import ParameterSequence, RingAnalysis
from ..ring_extract import ExtractionState, hilbert_audit
from .certificate import CompletionVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PipelineReport:
    """
    Outcome of one compute-until-complete run. ``presentation`` agrees with
    the resolution ranks through ``presentation.N`` whether or not the run
    completed.
    """

    presentation: TruncatedPresentation
    verdict: Optional[CompletionVerdict]
    ranks: Tuple[int, ...]
    params: Optional[ParameterSequence]
    p_rank: int
    center_rank: int
    status: str
    message: str = ""
    periodicity: Optional[int] = None
    analysis: Optional[RingAnalysis] = field(default=None, repr=False)
    history: Tuple[dict, ...] = ()
    timings: Dict[int, float] = field(default_factory=dict, repr=False)
    extraction: Optional[ExtractionState] = field(default=None, repr=False)

    @property
    def complete(self) -> bool:
        return self.verdict is not None and self.verdict.complete

    @property
    def reg(self):
        if self.analysis is None:
            return None
        return self.analysis.report.reg_exact

    def reg_checks(self) -> Dict[str, Optional[bool]]:
        """Reg >= 0 always holds for group cohomology; Reg = 0 is the conjectured value."""
        reg = self.reg
        if reg is None:
            return {"reg_nonnegative": None, "reg_zero": None}
        return {"reg_nonnegative": reg >= 0, "reg_zero": reg == 0}

    def audit(self, extra: int = 5, caps: Optional[Caps] = None) -> List[Tuple[int, int, int]]:
        """
        Hilbert function of the presentation against b_n through N + ``extra``;
        returns the mismatching degrees.
        """
        if self.extraction is None:
            return []
        mismatches = hilbert_audit(self.extraction, extra, caps)
        if mismatches and self.complete:
            logger.error(f"Completed presentation disagrees with the resolution: {mismatches}")
        return mismatches
