# tests/conftest.py

import json
from pathlib import Path
from typing import Any, Dict

import pytest

from cohomod.config import Caps
from cohomod.formats import group_from_document
from cohomod.gring import GradedPresentation

# ============================================================================
# Group documents (permutation images are 1-based, as in group JSON files)
# ============================================================================

GROUP_DOCS: Dict[str, Dict[str, Any]] = {
    "z2": {"p": 2, "generators": [[2, 1]]},
    "z4": {"p": 2, "generators": [[2, 3, 4, 1]]},
    "klein": {"p": 2, "generators": [[2, 1, 3, 4], [1, 2, 4, 3]]},
    "d8": {"p": 2, "generators": [[2, 3, 4, 1], [1, 4, 3, 2]]},
    # left multiplication by i and j on (1, -1, i, -i, j, -j, k, -k)
    "q8": {"p": 2, "generators": [[3, 4, 2, 1, 7, 8, 6, 5], [5, 6, 8, 7, 2, 1, 3, 4]]},
    "z3": {"p": 3, "generators": [[2, 3, 1]]},
}


@pytest.fixture
def caps() -> Caps:
    """Default caps, independent of any COHOMOD_* variables in the environment."""
    return Caps()


@pytest.fixture
def z2(caps):
    return group_from_document(GROUP_DOCS["z2"], caps)


@pytest.fixture
def z4(caps):
    return group_from_document(GROUP_DOCS["z4"], caps)


@pytest.fixture
def klein(caps):
    return group_from_document(GROUP_DOCS["klein"], caps)


@pytest.fixture
def d8(caps):
    return group_from_document(GROUP_DOCS["d8"], caps)


@pytest.fixture
def q8(caps):
    return group_from_document(GROUP_DOCS["q8"], caps)


@pytest.fixture
def z3(caps):
    return group_from_document(GROUP_DOCS["z3"], caps)


# ============================================================================
# Small rings
# ============================================================================

@pytest.fixture
def poly_xy() -> GradedPresentation:
    """F_2[x, y], both in degree 1."""
    return GradedPresentation(2, (("x", 1), ("y", 1)))


@pytest.fixture
def micro_ring(poly_xy) -> GradedPresentation:
    """F_2[x, y] / (x^2, xy): y acts with kernel spanned by x."""
    x, y = poly_xy.gen(0), poly_xy.gen(1)
    return poly_xy.with_relations((x * x, x * y))


@pytest.fixture
def cyclic4_ring() -> GradedPresentation:
    """F_2[x, y] / (x^2) with |x| = 1, |y| = 2."""
    free = GradedPresentation(2, (("x", 1), ("y", 2)))
    x = free.gen(0)
    return free.with_relations((x * x,))


# ============================================================================
# JSON files
# ============================================================================

MICRO_RING_DOC = {
    "p": 2,
    "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
    "relations": [
        [{"c": 1, "m": [[0, 2]]}],
        [{"c": 1, "m": [[0, 1], [1, 1]]}],
    ],
}

MICRO_HSOP_DOC = {"elements": [[{"c": 1, "m": [[1, 1]]}]]}


@pytest.fixture
def write_json(tmp_path: Path):
    """Write a document to tmp_path/<name> and return the path as a string."""

    def _write(name: str, doc: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def group_file(write_json):
    """Path to the JSON file of a named group from GROUP_DOCS."""

    def _file(name: str) -> str:
        return write_json(f"{name}.json", GROUP_DOCS[name])

    return _file


@pytest.fixture
def micro_ring_file(write_json) -> str:
    return write_json("micro_ring.json", MICRO_RING_DOC)


@pytest.fixture
def micro_hsop_file(write_json) -> str:
    return write_json("micro_hsop.json", MICRO_HSOP_DOC)
