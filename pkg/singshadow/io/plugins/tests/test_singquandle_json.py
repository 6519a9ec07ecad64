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

import numpy as np
import pytest

from singshadow.conftest import write_json
from singshadow.exceptions import AxiomViolation, AxiomWarning
from singshadow.io._io import load
from singshadow.io.plugins.singquandle_json import (
    singquandle_from_dict,
    singquandle_to_dict,
)


class TestSingquandleJSON:
    def test_linear_form(self, z4):
        Q = singquandle_from_dict(
            {"linear": {"modulus": 4, "a": 3, "b": 2, "c": 3}}, name="from file"
        )
        assert Q.name == "from file"
        assert Q.elements == z4.elements
        assert np.array_equal(Q.tables, z4.tables)

    def test_linear_missing_parameter(self):
        with pytest.raises(ValueError, match="Linear structure is missing 'c'"):
            _ = singquandle_from_dict({"linear": {"modulus": 4, "a": 3, "b": 2}})

    def test_tables_form(self, z8_pair):
        d = singquandle_to_dict(z8_pair)
        assert list(d) == ["name", "elements", "star", "bar_star", "r1", "r2"]
        del d["bar_star"]
        Q = singquandle_from_dict(d)
        assert np.array_equal(Q.tables, z8_pair.tables)

    def test_file_name_is_default_name(self, tmp_path, z4):
        d = singquandle_to_dict(z4)
        del d["name"]
        Q = load(write_json(tmp_path, "my_z4.json", d))
        assert Q.name == "my_z4"

    @pytest.mark.parametrize("missing", ["elements", "star", "r1", "r2"])
    def test_missing_key(self, broken_singquandle_dict, missing):
        del broken_singquandle_dict[missing]
        with pytest.raises(ValueError, match=f"Singquandle is missing '{missing}'"):
            _ = singquandle_from_dict(broken_singquandle_dict)

    def test_unknown_entry(self, broken_singquandle_dict):
        broken_singquandle_dict["r1"][2][1] = "d"
        with pytest.raises(ValueError, match="Table 'r1' entry 'd' is not an element"):
            _ = singquandle_from_dict(broken_singquandle_dict, strict=False)

    def test_table_not_rows(self, broken_singquandle_dict):
        broken_singquandle_dict["r2"] = 3
        with pytest.raises(ValueError, match="Table 'r2' must be a list of rows"):
            _ = singquandle_from_dict(broken_singquandle_dict, strict=False)

    def test_strict_in_object(self, broken_singquandle_dict):
        with pytest.raises(AxiomViolation):
            _ = singquandle_from_dict(broken_singquandle_dict)
        broken_singquandle_dict["strict"] = False
        with pytest.warns(AxiomWarning, match="broken"):
            Q = singquandle_from_dict(broken_singquandle_dict)
        assert singquandle_to_dict(Q)["strict"] is False
