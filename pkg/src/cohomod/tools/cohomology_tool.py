# src/cohomod/tools/cohomology_tool.py

import logging
from typing import Any, Dict, Optional

from ..complete import compute_until_complete
from ..config import Caps
from ..errors import EXIT_INCOMPLETE, EXIT_OK
from ..formats import (
    analysis_to_document,
    degree_value,
    inputs_digest,
    load_group,
    load_param_terms,
    polynomial_to_document,
    presentation_to_document,
)
from .base_tool import BaseTool

logger = logging.getLogger(__name__)


class CohomologyTool(BaseTool):
    """
    Compute the mod-p cohomology ring of a p-group until the completion
    certificate (or, in p-rank one, periodicity) proves the presentation whole.
    """

    # --- 1. Required Metadata ---
    name: str = "cohomology"
    description: str = (
        "Compute generators and relations of H*(G, F_p) for a p-group G degree by degree, "
        "stopping when the presentation is certified complete. Exits 2 if the caps run out first."
    )

    parameters: Dict[str, Any] = {
        "type": "object",
        "properties": {
            "group_file": {
                "type": "string",
                "description": "Group JSON: permutation generators (1-based) or a 0-based multiplication table.",
            },
            "params_file": {
                "type": ["string", "null"],
                "description": "Parameters (hsop JSON over generator indices) to use instead of the Dickson search.",
                "default": None,
            },
            "max_degree": {
                "type": ["integer", "null"],
                "description": "Highest degree the resolution is extended to.",
                "default": None,
            },
            "max_dim": {
                "type": ["integer", "null"],
                "description": "Largest matrix width in F_p-columns.",
                "default": None,
            },
            "max_order": {
                "type": ["integer", "null"],
                "description": "Largest group order accepted.",
                "default": None,
            },
            "bound": {
                "type": ["integer", "null"],
                "description": "Highest internal degree used for ring analysis.",
                "default": None,
            },
            "dilation": {
                "type": ["integer", "null"],
                "description": "Largest Dickson dilation exponent tried.",
                "default": None,
            },
            "strict": {
                "type": ["boolean", "null"],
                "description": (
                    "Force the strict inequality (--strict) or the non-strict one (--nonstrict). "
                    "The non-strict form is refused unless the center has rank >= 2 or --assume-depth2 is given."
                ),
                "default": None,
            },
            "assume_depth2": {
                "type": "boolean",
                "description": "Accept depth >= 2 without a central elementary abelian subgroup of rank 2.",
                "default": False,
            },
        },
        "required": ["group_file"],
    }

    def run(
        self,
        group_file: str,
        params_file: Optional[str] = None,
        max_degree: Optional[int] = None,
        max_dim: Optional[int] = None,
        max_order: Optional[int] = None,
        bound: Optional[int] = None,
        dilation: Optional[int] = None,
        strict: Optional[bool] = None,
        assume_depth2: bool = False,
    ) -> Dict[str, Any]:
        caps = Caps.from_env(
            max_degree=max_degree,
            max_dim=max_dim,
            max_order=max_order,
            max_bound=bound,
            max_dilation=dilation,
        )
        group = load_group(group_file, caps)
        terms = load_param_terms(params_file) if params_file else None
        report = compute_until_complete(group, caps, terms, strict=strict, assume_depth2=assume_depth2)

        verdict = report.verdict
        analysis = report.analysis
        document = {
            "command": self.name,
            "inputs_digest": inputs_digest([group_file, params_file]),
            "status": report.status,
            "complete": report.complete,
            "message": report.message,
            "N": report.presentation.N,
            "group": {"p": group.p, "order": group.order},
            "p_rank": report.p_rank,
            "center_rank": report.center_rank,
            "ranks": list(report.ranks),
            "presentation": presentation_to_document(report.presentation.base),
            "params": None if report.params is None else [polynomial_to_document(z) for z in report.params.elements],
            "param_text": None
            if report.params is None
            else [z.to_string(report.presentation.base.names) for z in report.params.elements],
            "periodicity": report.periodicity,
            "verdict": None if verdict is None else verdict.as_dict(),
            "alpha": None if verdict is None else degree_value(verdict.alpha),
            "bound": None if verdict is None else verdict.bound,
            "mode": None if analysis is None else analysis.mode,
            "analysis": None if analysis is None else analysis_to_document(analysis),
            "reg_checks": report.reg_checks(),
            "history": list(report.history),
            "timings": {str(n): round(t, 6) for n, t in report.timings.items()},
        }
        return document

    def exit_code(self, document: Dict[str, Any]) -> int:
        return EXIT_OK if document.get("complete") else EXIT_INCOMPLETE
