# -*- coding: utf-8 -*-
# Copyright 2021 The singshadow developers
#
# This file is part of singshadow.
#
# singshadow is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# singshadow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with singshadow. If not, see <http://www.gnu.org/licenses/>.

import importlib

from singshadow.diagram import builtin, colorings
from singshadow.invariants import DistinguishReport, InvariantComparison, distinguish


class TestDistinguish:
    def test_4_1k_and_5_4k_differ_at_sp_only(self, shadow_z8_z6):
        report = distinguish(builtin("4_1^k"), builtin("5_4^k"), shadow_z8_z6)
        assert isinstance(report, DistinguishReport)
        assert report.distinguished
        assert report.differing == ["SP"]
        entries = report.entries
        assert entries["counting"] == InvariantComparison("counting", "16", "16")
        assert entries["shadow_counting"].first == "96"
        assert entries["SP"].first == "24*u^{t^2} + 24*u^{t} + 48*u^{2}"
        assert entries["SP"].second == "48*u^{t^4} + 24*u^{t^2} + 24*u^{t}"

    def test_kinked_trefoil_not_distinguished(self, shadow_z10_z4):
        report = distinguish(
            builtin("3_1^k"), builtin("3_1^k_kinked"), shadow_z10_z4, workers=2
        )
        assert report.equal
        assert report.differing == []

    def test_lines_and_dict(self, shadow_z8_z6):
        report = distinguish(builtin("4_1^k"), builtin("5_4^k"), shadow_z8_z6)
        lines = report.lines()
        assert lines[0] == f"4_1^k vs 5_4^k over {shadow_z8_z6.name}"
        assert "counting: equal" in lines
        assert "SP: DIFFERENT" in lines
        assert str(report) == "\n".join(lines)
        d = report.to_dict()
        assert d["distinguished"] is True
        assert list(d["invariants"]) == ["counting", "shadow_counting", "ssqp", "SP"]
        assert d["invariants"]["SP"]["equal"] is False

    def test_om_passed_on(self, shadow_z12_z8):
        closure = distinguish(builtin("K1"), builtin("K2"), shadow_z12_z8)
        regions = distinguish(builtin("K1"), builtin("K2"), shadow_z12_z8, om="regions")
        assert closure.entries["SP"].second.endswith("8*u^{4}")
        assert regions.entries["SP"].second.endswith("8*u^{3}")

    def test_colorings_computed_once_per_diagram(self, monkeypatch, shadow_z8_z6):
        calls = []

        def counted(D, Q, workers=None):
            calls.append(D.name)
            return colorings(D, Q, workers=workers)

        for module in ("counting", "distinguish", "polynomials"):
            module = importlib.import_module(f"singshadow.invariants.{module}")
            monkeypatch.setattr(module, "colorings", counted)
        report = distinguish(builtin("4_1^k"), builtin("5_4^k"), shadow_z8_z6)
        assert calls == ["4_1^k", "5_4^k"]
        assert report.differing == ["SP"]
