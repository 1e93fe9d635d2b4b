# src/cohomod/tools/tool_registry.py

import logging
from typing import Any, Dict, List, Tuple

from ..errors import CohomodError
from .base_tool import BaseTool

logger = logging.getLogger(__name__)


class ToolRegistry:
    """
    Central registry of the cohomod commands.

    Looks tools up by name and runs them behind one execution interface that
    turns engine errors into exit codes and error documents.
    """

    def __init__(self, tools: List[BaseTool]):
        """
        :param tools: Initialized BaseTool instances.
        """
        self.tools: Dict[str, BaseTool] = {}
        for tool in tools:
            if not tool.name:
                raise ValueError(f"Tool instance of type {type(tool).__name__} must define a 'name' attribute.")
            if tool.name in self.tools:
                logger.warning(f"Duplicate tool name registered: {tool.name}. Skipping the duplicate instance.")
                continue
            self.tools[tool.name] = tool
            logger.debug(f"Tool registered: {tool.name}")

    @staticmethod
    def _create_json_schema(tool: BaseTool) -> Dict[str, Any]:
        """
        The tool's metadata, with an empty parameters object when its
        schema is missing or not an object schema.
        """
        schema = tool.get_metadata()
        params = tool.parameters
        if not params or params.get("type") != "object":
            logger.warning(
                f"Tool '{tool.name}' has invalid or missing 'parameters' definition. "
                "Defaulting to an empty parameters object."
            )
            schema["function"]["parameters"] = {"type": "object", "properties": {}}
        return schema

    def get_tool_descriptions(self) -> List[Dict[str, Any]]:
        return [self._create_json_schema(tool) for tool in self.tools.values()]

    def get_tool_instance(self, name: str) -> BaseTool:
        """
        :raises ValueError: if the tool is not registered.
        """
        if name not in self.tools:
            raise ValueError(f"Tool '{name}' is not registered in the ToolRegistry.")
        return self.tools[name]

    def execute_tool_call(self, tool_name: str, **kwargs) -> Tuple[int, Dict[str, Any]]:
        """
        Run one tool.

        :param tool_name: Registered tool name.
        :param kwargs: Arguments for the tool's ``run``.
        :return: (exit code, document). Engine errors give their own exit
            code and an error document; anything else propagates.
        """
        tool = self.get_tool_instance(tool_name)
        logger.info(f"Executing tool: {tool_name} with args: {kwargs}")
        try:
            document = tool.run(**kwargs)
        except CohomodError as e:
            logger.error(f"{tool_name} failed: {type(e).__name__}: {e}")
            return e.exit_code, {
                "command": tool_name,
                "error": {"type": type(e).__name__, "message": str(e), "exit_code": e.exit_code},
            }
        except Exception as e:
            logger.error(f"Unexpected runtime error during execution of {tool_name}: {e}")
            raise
        code = tool.exit_code(document)
        logger.info(f"Tool {tool_name} finished with exit code {code}")
        return code, document
