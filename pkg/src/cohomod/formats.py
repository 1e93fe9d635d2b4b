# src/cohomod/formats.py

"""
JSON formats for groups, rings, parameter sequences and reports.

    group  {"p": 2, "generators": [[2, 1, 4, 3], ...]}   permutations, 1-based images
           {"p": 2, "table": [[0, 1], [1, 0]]}           0-based, identity = 0
    ring   {"p": 2, "generators": [{"name": "x", "degree": 1}, ...], "relations": [POLY, ...]}
    hsop   {"elements": [POLY, ...]}
    POLY   [{"c": 1, "m": [[0, 2], [1, 1]]}, ...]          [generator index (0-based), exponent]

Monomials are multiplied out in the order given, so a factor list out of
order picks up its graded-commutative sign on load.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from .config import Caps
from .errors import InputFormatError
from .gring import NEG_INF, GradedPresentation, Polynomial
from .group import PGroup, build_group, build_group_from_table
from .regseq import ParameterSequence, RingAnalysis

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
Term = Tuple[int, Tuple[Tuple[int, int], ...]]


def _read_json(path: PathLike) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise InputFormatError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}: invalid JSON ({e})") from e


def _require(doc: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise InputFormatError(f"{where}: missing '{key}'")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputFormatError(f"{where}: '{key}' must be {kind.__name__}")
    return value


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

def group_from_document(doc: Any, caps: Optional[Caps] = None) -> PGroup:
    caps = caps or Caps.from_env()
    p = _require(doc, "p", int, "group")
    if "table" in doc:
        return build_group_from_table(p, _require(doc, "table", list, "group"), caps.max_order)
    gens = _require(doc, "generators", list, "group")
    zero_based = []
    for g in gens:
        if not isinstance(g, list) or not all(isinstance(v, int) for v in g):
            raise InputFormatError(f"group: generator {g!r} must be a list of integers")
        zero_based.append([v - 1 for v in g])
    return build_group(p, zero_based, caps.max_order)


def load_group(path: PathLike, caps: Optional[Caps] = None) -> PGroup:
    return group_from_document(_read_json(path), caps)


# ---------------------------------------------------------------------------
# Polynomials, rings, parameters
# ---------------------------------------------------------------------------

def parse_terms(doc: Any, where: str = "polynomial") -> List[Term]:
    """Validate a POLY document into (coefficient, ((index, exponent), ...)) terms."""
    if not isinstance(doc, list):
        raise InputFormatError(f"{where}: expected a list of terms")
    terms = []
    for t in doc:
        c = _require(t, "c", int, where)
        factors = _require(t, "m", list, where)
        parsed = []
        for f in factors:
            if (
                not isinstance(f, list)
                or len(f) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in f)
                or f[0] < 0
                or f[1] < 0
            ):
                raise InputFormatError(f"{where}: factor {f!r} must be [index >= 0, exponent >= 0]")
            parsed.append((f[0], f[1]))
        terms.append((c, tuple(parsed)))
    return terms


def terms_max_index(polys: Iterable[Sequence[Term]]) -> int:
    return max((i for terms in polys for _, factors in terms for i, _ in factors), default=-1)


def polynomial_from_terms(terms: Sequence[Term], pres: GradedPresentation) -> Polynomial:
    """
    :raises InputFormatError: if a factor names a generator ``pres`` lacks.
    """
    k = len(pres.degrees)
    total = pres.zero()
    for c, factors in terms:
        term = pres.one().scale(c)
        for i, e in factors:
            if i >= k:
                raise InputFormatError(f"Generator index {i} out of range for {k} generator(s)")
            term = term * pres.gen(i) ** e
        total = total + term
    return total


def parameters_from_terms(polys: Sequence[Sequence[Term]], pres: GradedPresentation) -> ParameterSequence:
    return ParameterSequence(tuple(polynomial_from_terms(t, pres) for t in polys))


def polynomial_to_document(poly: Polynomial) -> List[dict]:
    return [
        {"c": int(c), "m": [[i, int(e)] for i, e in enumerate(mono) if e]}
        for mono, c in poly.sorted_terms()
    ]


def ring_from_document(doc: Any) -> GradedPresentation:
    p = _require(doc, "p", int, "ring")
    gens = _require(doc, "generators", list, "ring")
    generators = []
    for g in gens:
        name = _require(g, "name", str, "ring generator")
        degree = _require(g, "degree", int, "ring generator")
        generators.append((name, degree))
    free = GradedPresentation(p, tuple(generators))
    relations = tuple(
        polynomial_from_terms(parse_terms(r, "ring relation"), free) for r in doc.get("relations", [])
    )
    pres = free.with_relations(relations) if relations else free
    logger.debug(f"Loaded ring {pres.describe()}")
    return pres


def load_ring(path: PathLike) -> GradedPresentation:
    return ring_from_document(_read_json(path))


def load_param_terms(path: PathLike) -> List[List[Term]]:
    doc = _read_json(path)
    elements = _require(doc, "elements", list, "hsop")
    return [parse_terms(e, f"hsop element {i}") for i, e in enumerate(elements)]


def load_hsop(path: PathLike, pres: GradedPresentation) -> ParameterSequence:
    return parameters_from_terms(load_param_terms(path), pres)


def presentation_to_document(pres: GradedPresentation) -> dict:
    return {
        "p": pres.p,
        "generators": [{"name": n, "degree": d} for n, d in pres.generators],
        "relations": [polynomial_to_document(r) for r in pres.relations if not r.is_zero()],
        "text": pres.describe(),
    }


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def degree_value(v: Any) -> Any:
    """-inf as the string "-inf", integral floats as ints."""
    if v is None:
        return None
    if v == NEG_INF:
        return "-inf"
    return int(v)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float):
        return degree_value(obj) if obj == NEG_INF or obj.is_integer() else obj
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def inputs_digest(paths: Iterable[Optional[PathLike]]) -> str:
    """sha256 over the bytes of every input file, in order."""
    h = hashlib.sha256()
    for path in paths:
        if path is None:
            continue
        h.update(Path(path).read_bytes())
    return h.hexdigest()


def dump_report(doc: dict, path: Optional[PathLike] = None, include_timings: bool = False) -> str:
    """
    Serialize a report document; ``timings`` is dropped unless requested so
    identical inputs give byte-identical reports.
    """
    body = dict(doc)
    if not include_timings:
        body.pop("timings", None)
    text = json.dumps(_jsonable(body), sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Report written to {path}")
    return text


def analysis_to_document(analysis: RingAnalysis) -> dict:
    report = analysis.report
    return {
        "mode": analysis.mode,
        "bound": analysis.bound,
        "type": [degree_value(v) for v in analysis.measured.d],
        "envelope": [degree_value(v) for v in analysis.envelope.d],
        "flags": analysis.flags.as_dict(),
        "condition_c": analysis.condition_c,
        "a_bounds": [degree_value(v) for v in report.a_bound],
        "a0": degree_value(report.a0_exact),
        "a_exact": None if analysis.a_exact is None else [degree_value(v) for v in analysis.a_exact],
        "a_max": degree_value(report.a_max_exact),
        "reg": degree_value(report.reg_exact),
        "depth": report.depth,
        "betti": None if analysis.betti is None else [degree_value(v) for v in analysis.betti.betas],
        "strongly_matches_reg": analysis.strongly_matches_reg(),
    }
