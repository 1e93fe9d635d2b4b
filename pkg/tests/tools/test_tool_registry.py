# tests/tools/test_tool_registry.py

from typing import Any, Dict

import pytest

from cohomod.errors import EXIT_INCOMPLETE, EXIT_OK, EXIT_PARSE_ERROR, EXIT_SEMANTIC_ERROR, CapExceededError, InputFormatError, NotHSOPError
from cohomod.tools import BaseTool, ToolRegistry, default_tools

# --- Mock Tools for Testing ---


class MockDegreeTool(BaseTool):
    """A mock tool to test argument passing."""

    name: str = "mock_degree"
    description: str = "Adds two degrees."
    parameters: Dict[str, Any] = {
        "type": "object",
        "properties": {
            "a": {"type": "integer", "description": "First degree."},
            "b": {"type": "integer", "description": "Second degree.", "default": 0},
        },
        "required": ["a"],
    }

    def run(self, a: int, b: int = 0) -> Dict[str, Any]:
        return {"command": self.name, "degree": a + b}


class MockFailingTool(BaseTool):
    """A mock tool raising a chosen error."""

    name: str = "mock_failing"
    description: str = "Raises the error it is given."
    parameters: Dict[str, Any] = {}

    def run(self, error: Exception) -> Dict[str, Any]:
        raise error


# --- Fixtures ---


@pytest.fixture
def test_registry() -> ToolRegistry:
    return ToolRegistry(tools=[MockDegreeTool(), MockFailingTool()])


# ==============================================================================
# A. Initialization and Discovery Tests
# ==============================================================================


def test_registry_initialization_success(test_registry: ToolRegistry):
    assert len(test_registry.tools) == 2
    assert isinstance(test_registry.tools["mock_degree"], MockDegreeTool)


def test_registry_initialization_duplicate_names():
    registry = ToolRegistry(tools=[MockDegreeTool(), MockDegreeTool()])
    assert len(registry.tools) == 1


def test_default_tools_registered():
    registry = ToolRegistry(default_tools())
    assert set(registry.tools) == {"cohomology", "analyze", "dickson", "koszul"}


def test_get_tool_instance_unknown(test_registry: ToolRegistry):
    with pytest.raises(ValueError, match="not registered"):
        test_registry.get_tool_instance("no_such_tool")


# ==============================================================================
# B. Tool Description (JSON Schema) Tests
# ==============================================================================


def test_get_tool_descriptions_format(test_registry: ToolRegistry):
    descriptions = test_registry.get_tool_descriptions()
    desc = next(d for d in descriptions if d["function"]["name"] == "mock_degree")
    assert desc["type"] == "function"
    params = desc["function"]["parameters"]
    assert params["type"] == "object"
    assert params["required"] == ["a"]


def test_get_tool_descriptions_empty_parameters(test_registry: ToolRegistry):
    descriptions = test_registry.get_tool_descriptions()
    desc = next(d for d in descriptions if d["function"]["name"] == "mock_failing")
    assert desc["function"]["parameters"] == {"type": "object", "properties": {}}


# ==============================================================================
# C. Execution Dispatch Tests
# ==============================================================================


def test_execute_tool_call_success(test_registry: ToolRegistry):
    code, doc = test_registry.execute_tool_call("mock_degree", a=2, b=3)
    assert code == EXIT_OK
    assert doc == {"command": "mock_degree", "degree": 5}


@pytest.mark.parametrize(
    "error,expected",
    [
        (InputFormatError("bad json"), EXIT_PARSE_ERROR),
        (NotHSOPError("not a system of parameters"), EXIT_SEMANTIC_ERROR),
        (CapExceededError("degree cap"), EXIT_INCOMPLETE),
    ],
)
def test_execute_tool_call_engine_errors(test_registry: ToolRegistry, error, expected):
    code, doc = test_registry.execute_tool_call("mock_failing", error=error)
    assert code == expected
    assert doc["command"] == "mock_failing"
    assert doc["error"]["type"] == type(error).__name__
    assert doc["error"]["exit_code"] == expected


def test_execute_tool_call_unexpected_error_propagates(test_registry: ToolRegistry):
    with pytest.raises(RuntimeError):
        test_registry.execute_tool_call("mock_failing", error=RuntimeError("boom"))
