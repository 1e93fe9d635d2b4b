from .analyze_tool import AnalyzeRingTool
from .base_tool import BaseTool
from .cohomology_tool import CohomologyTool
from .dickson_tool import DicksonTool
from .koszul_tool import KoszulTool
from .tool_registry import ToolRegistry


def default_tools():
    return [CohomologyTool(), AnalyzeRingTool(), DicksonTool(), KoszulTool()]


__all__ = [
    "AnalyzeRingTool",
    "BaseTool",
    "CohomologyTool",
    "DicksonTool",
    "KoszulTool",
    "ToolRegistry",
    "default_tools",
]
