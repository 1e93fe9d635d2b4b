# tests/test_formats.py

import json

import pytest

from cohomod.errors import CapExceededError, InputFormatError, NotAPGroupError
from cohomod.formats import (
    degree_value,
    dump_report,
    group_from_document,
    inputs_digest,
    load_group,
    load_hsop,
    load_ring,
    parse_terms,
    polynomial_from_terms,
    polynomial_to_document,
    presentation_to_document,
    ring_from_document,
)
from cohomod.gring import NEG_INF

# ==============================================================================
# A. Groups
# ==============================================================================


class TestGroups:
    def test_permutations_are_one_based(self, caps):
        g = group_from_document({"p": 2, "generators": [[2, 1, 4, 3], [3, 4, 1, 2]]}, caps)
        assert g.order == 4

    def test_table(self, caps):
        g = group_from_document({"p": 2, "table": [[0, 1], [1, 0]]}, caps)
        assert g.order == 2

    def test_missing_prime(self, caps):
        with pytest.raises(InputFormatError, match="missing 'p'"):
            group_from_document({"generators": [[2, 1]]}, caps)

    def test_bad_generator(self, caps):
        with pytest.raises(InputFormatError):
            group_from_document({"p": 2, "generators": [["a", "b"]]}, caps)

    def test_not_a_p_group(self, caps):
        with pytest.raises(NotAPGroupError):
            group_from_document({"p": 2, "generators": [[2, 3, 1]]}, caps)

    def test_order_cap(self):
        from cohomod.config import Caps

        with pytest.raises(CapExceededError):
            group_from_document({"p": 2, "generators": [[2, 3, 4, 1]]}, Caps(max_order=2))

    def test_load_group_errors(self, tmp_path, caps):
        with pytest.raises(InputFormatError, match="File not found"):
            load_group(tmp_path / "missing.json", caps)
        bad = tmp_path / "bad.json"
        bad.write_text("[1, 2", encoding="utf-8")
        with pytest.raises(InputFormatError, match="invalid JSON"):
            load_group(bad, caps)


# ==============================================================================
# B. Polynomials and rings
# ==============================================================================


class TestPolynomials:
    def test_parse_terms(self):
        assert parse_terms([{"c": 1, "m": [[0, 2], [1, 1]]}]) == [(1, ((0, 2), (1, 1)))]

    @pytest.mark.parametrize(
        "doc",
        [
            {"c": 1},
            [{"c": "1", "m": []}],
            [{"c": 1, "m": [[0]]}],
            [{"c": 1, "m": [[-1, 1]]}],
            [{"c": True, "m": []}],
        ],
    )
    def test_malformed_terms(self, doc):
        with pytest.raises(InputFormatError):
            parse_terms(doc)

    def test_index_out_of_range(self, poly_xy):
        with pytest.raises(InputFormatError, match="out of range"):
            polynomial_from_terms([(1, ((2, 1),))], poly_xy)

    def test_factor_order_sign_at_odd_prime(self):
        ring = ring_from_document({"p": 3, "generators": [{"name": "a", "degree": 1}, {"name": "b", "degree": 1}]})
        ab = polynomial_from_terms([(1, ((0, 1), (1, 1)))], ring)
        ba = polynomial_from_terms([(1, ((1, 1), (0, 1)))], ring)
        assert ba == ab.scale(-1)

    def test_polynomial_to_document(self, poly_xy):
        x, y = poly_xy.gen(0), poly_xy.gen(1)
        assert polynomial_to_document(x * x + x * y) == [{"c": 1, "m": [[0, 2]]}, {"c": 1, "m": [[0, 1], [1, 1]]}]

    def test_load_ring(self, micro_ring_file, micro_ring):
        ring = load_ring(micro_ring_file)
        assert ring.describe() == micro_ring.describe()
        assert ring.hilbert(4) == [1, 2, 1, 1, 1]

    def test_load_hsop(self, micro_ring_file, micro_hsop_file):
        ring = load_ring(micro_ring_file)
        params = load_hsop(micro_hsop_file, ring)
        assert params.elements == (ring.gen(1),)

    def test_hsop_needs_elements(self, write_json, micro_ring):
        path = write_json("empty.json", {})
        with pytest.raises(InputFormatError, match="missing 'elements'"):
            load_hsop(path, micro_ring)

    def test_presentation_to_document(self, micro_ring):
        doc = presentation_to_document(micro_ring)
        assert doc["generators"] == [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}]
        assert len(doc["relations"]) == 2
        assert doc["text"] == "F_2[x(1), y(1)] / (x^2, x*y)"


# ==============================================================================
# C. Reports
# ==============================================================================


class TestReports:
    def test_degree_value(self):
        assert degree_value(None) is None
        assert degree_value(NEG_INF) == "-inf"
        assert degree_value(3.0) == 3

    def test_dump_report_drops_timings(self, tmp_path):
        doc = {"b": [NEG_INF, 2.0], "a": 1, "timings": {"1": 0.5}}
        text = dump_report(doc, tmp_path / "r.json")
        assert json.loads(text) == {"a": 1, "b": ["-inf", 2]}
        assert (tmp_path / "r.json").read_text(encoding="utf-8") == text
        assert text.index('"a"') < text.index('"b"')

    def test_dump_report_keeps_timings_on_request(self):
        assert "timings" in json.loads(dump_report({"timings": {"1": 0.5}}, include_timings=True))

    def test_inputs_digest(self, write_json):
        a = write_json("a.json", {"x": 1})
        b = write_json("b.json", {"x": 2})
        assert inputs_digest([a, None]) == inputs_digest([a])
        assert inputs_digest([a]) != inputs_digest([b])
