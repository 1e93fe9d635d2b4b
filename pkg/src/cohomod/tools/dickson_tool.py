# src/cohomod/tools/dickson_tool.py

from typing import Any, Dict, Optional

from ..dickson import dickson_set, restriction_power_relation, verify_gl_invariance
from ..formats import polynomial_to_document
from .base_tool import BaseTool


class DicksonTool(BaseTool):
    """Print the Dickson invariants c_{r,r-1}, ..., c_{r,0} over F_p."""

    name: str = "dickson"
    description: str = (
        "Generate the Dickson invariants of GL(r, F_p) from the product of (X - w) over the "
        "r-dimensional F_p-span, with their degrees, invariance and restriction checks."
    )

    parameters: Dict[str, Any] = {
        "type": "object",
        "properties": {
            "p": {"type": "integer", "description": "The prime."},
            "r": {"type": "integer", "description": "Number of variables."},
            "gen_degree": {
                "type": ["integer", "null"],
                "description": "Degree of each variable (default 1 for p = 2, 2 otherwise).",
                "default": None,
            },
        },
        "required": ["p", "r"],
    }

    def run(self, p: int, r: int, gen_degree: Optional[int] = None) -> Dict[str, Any]:
        ds = dickson_set(p, r, gen_degree)
        names = [str(v) for v in ds.variables]
        invariants = []
        for j, degree in zip(range(1, r + 1), ds.degrees()):
            poly = ds.to_polynomial(j)
            invariants.append(
                {
                    "name": f"c_{{{r},{r - j}}}",
                    "degree": degree,
                    "text": poly.to_string(names),
                    "terms": polynomial_to_document(poly),
                }
            )
        return {
            "command": self.name,
            "p": p,
            "r": r,
            "gen_degree": ds.gen_degree,
            "invariants": invariants,
            "gl_invariant": verify_gl_invariance(ds),
            "restriction_relations": {str(s): restriction_power_relation(ds, s) for s in range(1, r)},
        }
