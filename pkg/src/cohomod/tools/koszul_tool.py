# src/cohomod/tools/koszul_tool.py

from typing import Any, Dict, Optional

from ..config import Caps
from ..formats import degree_value, inputs_digest, load_hsop, load_ring
from ..regseq import MODE_BOUNDED, analyze_ring, koszul_cohomology, koszul_vanishing_violations
from .base_tool import BaseTool


class KoszulTool(BaseTool):
    """
    Bigraded Koszul cohomology table of a ring on a parameter sequence,
    checked against the vanishing bound n_1 + ... + n_s + d_{r-s} of the
    measured type.
    """

    name: str = "koszul"
    description: str = (
        "Tabulate dim H^{-s,t} of the Koszul complex of a ring on a parameter sequence and "
        "check it vanishes above the bound predicted by the sequence's type."
    )

    parameters: Dict[str, Any] = {
        "type": "object",
        "properties": {
            "ring_file": {"type": "string", "description": "Ring JSON."},
            "hsop_file": {"type": "string", "description": "Parameters JSON over the ring's generator indices."},
            "window": {
                "type": ["integer", "null"],
                "description": "Largest internal degree t tabulated (default: sum of parameter degrees + 4).",
                "default": None,
            },
        },
        "required": ["ring_file", "hsop_file"],
    }

    def run(self, ring_file: str, hsop_file: str, window: Optional[int] = None) -> Dict[str, Any]:
        pres = load_ring(ring_file)
        params = load_hsop(hsop_file, pres)
        window = window if window is not None else sum(params.degrees) + 4
        analysis = analyze_ring(pres, params, mode=MODE_BOUNDED, caps=Caps.from_env())
        report = koszul_cohomology(pres, params, window)
        r = params.r
        d = analysis.envelope.d
        limits = [sum(params.degrees) + d[r]] + [sum(params.degrees[:s]) + d[r - s] for s in range(1, r + 1)]
        return {
            "command": self.name,
            "inputs_digest": inputs_digest([ring_file, hsop_file]),
            "param_degrees": list(params.degrees),
            "window": window,
            "type": [degree_value(v) for v in d],
            "table": [list(row) for row in report.dims],
            "nonzero": [list(cell) for cell in report.nonzero()],
            "vanishing_limits": [degree_value(v) for v in limits],
            "violations": [list(cell) for cell in koszul_vanishing_violations(report, analysis.envelope)],
        }
