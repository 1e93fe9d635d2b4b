# src/cohomod/cli.py

"""
Command line front end.

Sub-commands are generated from the tools' JSON-Schema parameters:
required string properties become positional arguments, single-letter
properties short options (``-p``), ``*_file`` options drop the suffix
(``--params``), and a nullable boolean ``x`` becomes the pair ``--x`` /
``--nonx``.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .errors import EXIT_OK, EXIT_PARSE_ERROR
from .formats import dump_report
from .tools import ToolRegistry, default_tools

logger = logging.getLogger(__name__)

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def _types(spec: Dict[str, Any]) -> List[str]:
    t = spec.get("type", "string")
    return list(t) if isinstance(t, list) else [t]


def _flag(name: str) -> str:
    if len(name) == 1:
        return f"-{name}"
    if name.endswith("_file"):
        name = name[: -len("_file")]
    return "--" + name.replace("_", "-")


def add_tool_arguments(parser: argparse.ArgumentParser, parameters: Dict[str, Any]) -> None:
    """Translate a tool's parameter schema into argparse arguments."""
    required = set(parameters.get("required", []))
    for name, spec in parameters.get("properties", {}).items():
        types = _types(spec)
        help_text = spec.get("description")
        if "boolean" in types and "null" in types:
            group = parser.add_mutually_exclusive_group()
            group.add_argument(f"--{name}", dest=name, action="store_const", const=True, help=help_text)
            group.add_argument(f"--non{name}", dest=name, action="store_const", const=False)
            parser.set_defaults(**{name: None})
        elif "boolean" in types:
            parser.add_argument(_flag(name), dest=name, action="store_true", help=help_text)
        elif name in required and types == ["string"] and "enum" not in spec:
            parser.add_argument(name, help=help_text)
        else:
            kind = int if "integer" in types else str
            parser.add_argument(
                _flag(name),
                dest=name,
                type=kind,
                choices=spec.get("enum"),
                default=spec.get("default"),
                required=name in required,
                help=help_text,
            )


def build_parser(registry: ToolRegistry) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for detail")
    common.add_argument("--json", dest="json_path", default=None, help="Write the JSON report to this path")
    common.add_argument("--timings", action="store_true", help="Include wall-clock timings in the JSON report")

    parser = argparse.ArgumentParser(
        prog="cohomod",
        description="Mod-p cohomology rings of finite p-groups with a completion certificate.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    for schema in registry.get_tool_descriptions():
        fn = schema["function"]
        sub = commands.add_parser(fn["name"], parents=[common], help=fn["description"], description=fn["description"])
        add_tool_arguments(sub, fn["parameters"])
    return parser


def _fmt_list(values: Optional[Sequence[Any]]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")" if values is not None else "n/a"


def summarize(command: str, doc: Dict[str, Any]) -> str:
    """Human-readable summary of a report document."""
    if "error" in doc:
        err = doc["error"]
        return f"error ({err['type']}): {err['message']}"
    lines: List[str] = []
    if command == "cohomology":
        lines.append(f"status: {doc['status']} at degree {doc['N']} ({doc['message']})")
        lines.append(f"ring: {doc['presentation']['text']}")
        lines.append(f"ranks: {doc['ranks']}")
        if doc["param_text"]:
            lines.append(f"parameters: {', '.join(doc['param_text'])}")
        verdict = doc["verdict"]
        if verdict is not None and verdict["method"] == "certificate":
            lines.append(
                f"alpha {verdict['alpha']}, bound {verdict['bound']} ({verdict['inequality']}), "
                f"reasons {verdict['reasons'] or 'none'}"
            )
        analysis = doc["analysis"]
        if analysis is not None:
            lines.append(f"type {_fmt_list(analysis['type'])}, depth {analysis['depth']}, Reg {analysis['reg']}")
    elif command == "analyze":
        lines.append(f"ring: {doc['ring']['text']}")
        lines.append(f"parameters: {', '.join(doc['params'])}")
        lines.append(f"mode: {doc['mode']} (bound {doc['bound']})")
        lines.append(f"type {_fmt_list(doc['type'])}, envelope {_fmt_list(doc['envelope'])}")
        lines.append(
            "flags: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(doc["flags"].items()))
        )
        lines.append(f"depth {doc['depth']}, a-bounds {_fmt_list(doc['a_bounds'])}, Reg {doc['reg']}")
        if doc["betti"] is not None:
            lines.append(f"betti {_fmt_list(doc['betti'])}")
    elif command == "dickson":
        for inv in doc["invariants"]:
            lines.append(f"{inv['name']} = {inv['text']}  (degree {inv['degree']})")
        lines.append(f"GL({doc['r']}, F_{doc['p']})-invariant: {doc['gl_invariant']}")
    elif command == "koszul":
        lines.append(f"parameter degrees {_fmt_list(doc['param_degrees'])}, type {_fmt_list(doc['type'])}")
        for s, row in enumerate(doc["table"]):
            lines.append(f"s={s}: " + " ".join(str(v) for v in row))
        lines.append(f"violations: {doc['violations'] or 'none'}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    registry = ToolRegistry(default_tools())
    parser = build_parser(registry)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_PARSE_ERROR

    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    tool = registry.get_tool_instance(args.command)
    kwargs = {name: getattr(args, name) for name in tool.parameters.get("properties", {})}
    code, doc = registry.execute_tool_call(args.command, **kwargs)

    summary = summarize(args.command, doc)
    print(summary, file=sys.stderr if "error" in doc else sys.stdout)
    if args.json_path:
        dump_report(doc, args.json_path, include_timings=args.timings)
    return code


if __name__ == "__main__":
    sys.exit(main())
