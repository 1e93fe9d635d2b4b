# src/cohomod/tools/analyze_tool.py

import logging
from typing import Any, Dict, Optional

from ..config import Caps
from ..formats import analysis_to_document, inputs_digest, load_hsop, load_ring, presentation_to_document
from ..regseq import MODE_BOUNDED, MODE_CERTIFIED, analyze_ring, betti_bound_violations
from .base_tool import BaseTool

logger = logging.getLogger(__name__)


class AnalyzeRingTool(BaseTool):
    """
    Filter-regularity of a parameter sequence in a presented ring: measured
    type, admissible envelope, quasi-regularity flags, depth, a-invariant
    bounds and, when certified, Betti numbers and the exact regularity.
    """

    name: str = "analyze"
    description: str = (
        "Analyze a homogeneous system of parameters in a graded-commutative ring: type, "
        "quasi-regularity flags, depth, a-invariant bounds, Betti numbers and regularity."
    )

    parameters: Dict[str, Any] = {
        "type": "object",
        "properties": {
            "ring_file": {
                "type": "string",
                "description": "Ring JSON (generators with degrees, relations).",
            },
            "hsop_file": {
                "type": "string",
                "description": "Parameters JSON over the ring's generator indices.",
            },
            "bound": {
                "type": ["integer", "null"],
                "description": "Internal degree bound; doubled automatically when certification needs more.",
                "default": None,
            },
            "mode": {
                "type": "string",
                "enum": [MODE_CERTIFIED, MODE_BOUNDED],
                "description": "certified: exact Betti numbers and Reg; bounded: statements valid through the bound.",
                "default": MODE_CERTIFIED,
            },
        },
        "required": ["ring_file", "hsop_file"],
    }

    def run(
        self,
        ring_file: str,
        hsop_file: str,
        bound: Optional[int] = None,
        mode: str = MODE_CERTIFIED,
    ) -> Dict[str, Any]:
        caps = Caps.from_env()
        if bound is not None and bound > caps.max_bound:
            caps = Caps.from_env(max_bound=bound)
        pres = load_ring(ring_file)
        params = load_hsop(hsop_file, pres)
        analysis = analyze_ring(pres, params, bound=bound, mode=mode, caps=caps)
        document = {
            "command": self.name,
            "inputs_digest": inputs_digest([ring_file, hsop_file]),
            "ring": presentation_to_document(pres),
            "param_degrees": list(params.degrees),
            "params": [z.to_string(pres.names) for z in params.elements],
            **analysis_to_document(analysis),
        }
        if analysis.betti is not None:
            document["betti_bound_violations"] = betti_bound_violations(
                analysis.betti, analysis.envelope, params.degrees
            )
        return document
