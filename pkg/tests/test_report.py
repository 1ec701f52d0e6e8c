"""Rapor biçimlendirme testleri: değer biçimleri ve text/json/csv çıktıları."""

import json
from fractions import Fraction

from src.report import Report, format_value, render
from src.series import GrowthVerdict


# -- Helpers -----------------------------------------------------------------

def _sample_report():
    report = Report("growth", {"spec": "f2.json", "radius": 2})
    report.add_table("spheres", ("n", "sphere"), [(0, 1), (1, 4), (2, 12)])
    report.add_fields("profile", {"lambda": 3.0, "c_emp": Fraction(4, 3), "verdict": GrowthVerdict.BOUNDED_POSITIVE})
    return report


# == 1. Değer biçimleri =====================================================

class TestFormatValue:
    def test_scalars(self):
        assert format_value(None) == "-"
        assert format_value(True) == "true"
        assert format_value(Fraction(6, 3)) == "2"
        assert format_value(Fraction(-1, 2)) == "-1/2"
        assert format_value(0.1 + 0.2) == "0.3"
        assert format_value(complex(1, -2)) == "1-2j"

    def test_containers_and_enums(self):
        assert format_value([Fraction(1), Fraction(-1)]) == "[1, -1]"
        assert format_value(GrowthVerdict.LIMINF_ZERO) == "liminf-zero"


# == 2. Çıktılar ============================================================

class TestRender:
    def test_text(self):
        text = render(_sample_report(), "text")
        assert text.startswith("# gpgrowth growth\nspec: f2.json\nradius: 2\n")
        assert "== spheres ==" in text
        assert "n  sphere" in text
        assert "c_emp: 4/3" in text
        assert "verdict: bounded-positive" in text

    def test_partial_flag(self):
        report = _sample_report()
        report.partial = True
        assert "partial: true" in render(report, "text")
        assert json.loads(render(report, "json"))["partial"] is True

    def test_json(self):
        payload = json.loads(render(_sample_report(), "json"))
        assert payload["command"] == "growth"
        assert payload["sections"][0]["rows"] == [["0", "1"], ["1", "4"], ["2", "12"]]
        assert payload["sections"][1]["fields"]["c_emp"] == "4/3"

    def test_csv(self):
        lines = render(_sample_report(), "csv").splitlines()
        assert lines[:5] == ["# spheres", "n,sphere", "0,1", "1,4", "2,12"]
        assert "# profile" in lines
        assert "c_emp,4/3" in lines

    def test_deterministic(self):
        assert render(_sample_report(), "json") == render(_sample_report(), "json")
