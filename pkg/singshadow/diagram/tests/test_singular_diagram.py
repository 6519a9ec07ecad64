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

import json

import numpy as np
import pytest

from singshadow.diagram import (
    BUILTIN_DIAGRAMS,
    DEFAULT_CCW,
    SingularDiagram,
    VertexKind,
    builtin,
    builtin_names,
    diagram_from_dict,
    parse_diagram,
)
from singshadow.diagram._backtracking import EQUAL, R1, R2, STAR
from singshadow.exceptions import DanglingArc, MalformedVertex, UnknownName


class TestParseDiagram:
    def test_split_over_equals_merged(self, diagram_dict):
        D = diagram_from_dict(diagram_dict)
        merged = builtin("1_1^l")
        assert D.arcs == merged.arcs == ("x", "y", "z")
        assert [a.label for a in D.semi_arcs] == ["x.0", "x.1", "y", "z"]
        assert np.array_equal(D.constraints[:, :3], merged.constraints[:, :3])
        assert D.vertices[1].merged_over

    def test_semi_arcs_of_1_1l(self, diagram):
        x0, x1, y, z = diagram.semi_arcs
        assert (x0.tail, x0.head) == ((0, "right_out"), (1, "over_in"))
        assert (x1.tail, x1.head) == ((1, "over_out"), (0, "left_in"))
        assert (y.tail, y.head) == ((1, "under_out"), (0, "right_in"))
        assert (z.tail, z.head) == ((0, "left_out"), (1, "under_in"))
        assert diagram.other_end(0, "left_in") == (1, "over_out")
        assert diagram.other_end(1, "under_in") == (0, "left_out")
        assert diagram.semi_arc_at(1, "over_in") == 0

    def test_constraints(self, diagram):
        rows = diagram.constraints.tolist()
        x, y, z = (diagram.arc_index(a) for a in "xyz")
        assert rows == [[R1, z, x, y], [R2, x, x, y], [STAR, y, z, x]]
        assert not diagram.constraints.flags.writeable

    def test_split_over_adds_equality(self):
        D = parse_diagram(
            json.dumps(
                {
                    "vertices": [
                        {
                            "kind": "negative",
                            "under_in": "a",
                            "over_in": "b",
                            "under_out": "b",
                            "over_out": "a",
                        }
                    ]
                }
            ),
            name="curl",
        )
        assert D.name == "curl"
        assert not D.vertices[0].merged_over
        assert [EQUAL, 0, 1, 1] in D.constraints.tolist()

    def test_declared_arc_order(self, diagram_dict):
        diagram_dict["arcs"] = ["z", "y", "x"]
        D = diagram_from_dict(diagram_dict)
        assert D.arcs == ("z", "y", "x")
        assert D.arc_index("x") == 2
        with pytest.raises(KeyError, match="'w' is not an arc"):
            _ = D.arc_index("w")

    @pytest.mark.parametrize("arcs", [["x", "y"], ["x", "y", "z", "z"], "xyz"])
    def test_declared_arc_order_mismatch(self, diagram_dict, arcs):
        diagram_dict["arcs"] = arcs
        with pytest.raises(MalformedVertex, match="Diagram: 'arcs' must list"):
            _ = diagram_from_dict(diagram_dict)

    def test_to_dict_round_trip(self):
        for name in builtin_names():
            D = builtin(name)
            D2 = diagram_from_dict(D.to_dict())
            assert D2.arcs == D.arcs
            assert D2.vertices == D.vertices
            assert np.array_equal(D2.constraints, D.constraints)

    def test_custom_ccw_kept(self, diagram_dict):
        ccw = ["left_in", "right_in", "right_out", "left_out"]
        diagram_dict["vertices"][0]["ccw"] = ccw
        D = diagram_from_dict(diagram_dict)
        assert D.vertices[0].ccw == tuple(ccw)
        assert D.to_dict()["vertices"][0]["ccw"] == ccw
        assert "ccw" not in D.to_dict()["vertices"][1]
        assert D.vertices[1].ccw == DEFAULT_CCW[VertexKind.POSITIVE]

    def test_repr(self, diagram):
        assert repr(diagram) == (
            "SingularDiagram '1_1^l', 1 classical + 1 singular vertices, "
            "arcs ('x', 'y', 'z')"
        )


class TestMalformedDiagrams:
    @pytest.mark.parametrize(
        "vertex, match",
        [
            ({"kind": "virtual"}, "unknown kind 'virtual'"),
            ({"kind": "singular", "left_in": "a"}, "for 'right_in'"),
            (
                {"kind": "positive", "under_in": "a", "over": "b", "under_out": ""},
                "missing or empty arc label for 'under_out'",
            ),
            (
                {
                    "kind": "positive",
                    "under_in": "a",
                    "over": "b",
                    "over_in": "b",
                    "under_out": "a",
                },
                "give either 'over'",
            ),
            (
                {
                    "kind": "singular",
                    "over": "a",
                    "left_in": "a",
                    "right_in": "b",
                    "left_out": "a",
                    "right_out": "b",
                },
                r"unexpected keys \['over'\]",
            ),
            (
                {
                    "kind": "positive",
                    "under_in": "a",
                    "over": "b",
                    "under_out": "a",
                    "ccw": ["under_in", "over_in", "under_out", "under_out"],
                },
                "'ccw' must be an ordering",
            ),
            ("positive", "expected a JSON object"),
        ],
    )
    def test_malformed_vertex(self, vertex, match):
        with pytest.raises(MalformedVertex, match="Vertex 0: " + match) as e:
            _ = diagram_from_dict({"vertices": [vertex]})
        assert e.value.index == 0

    @pytest.mark.parametrize(
        "d", [{"vertices": []}, {"name": "empty"}, ["vertices"]]
    )
    def test_malformed_diagram(self, d):
        with pytest.raises(MalformedVertex, match="Diagram: "):
            _ = diagram_from_dict(d)

    def test_invalid_json(self):
        with pytest.raises(MalformedVertex, match="invalid JSON"):
            _ = parse_diagram("{vertices: ")

    def test_arc_without_end(self):
        d = {
            "vertices": [
                {
                    "kind": "singular",
                    "left_in": "a",
                    "right_in": "b",
                    "left_out": "c",
                    "right_out": "d",
                }
            ]
        }
        with pytest.raises(DanglingArc, match="Arc 'a' does not close up") as e:
            _ = diagram_from_dict(d)
        assert e.value.label == "a"

    def test_arc_with_two_starts(self):
        d = {
            "vertices": [
                {
                    "kind": "singular",
                    "left_in": "a",
                    "right_in": "x",
                    "left_out": "a",
                    "right_out": "a",
                }
            ]
        }
        with pytest.raises(DanglingArc, match="it leaves 2 vertex ends"):
            _ = diagram_from_dict(d)

    def test_over_only_loop(self):
        D = diagram_from_dict(
            {
                "vertices": [
                    {"kind": "positive", "under_in": "a", "over": "o", "under_out": "b"},
                    {"kind": "negative", "under_in": "b", "over": "o", "under_out": "a"},
                ]
            }
        )
        loop = [s for s in D.semi_arcs if s.arc == "o"]
        assert [(s.tail, s.head) for s in loop] == [
            ((0, "over_out"), (1, "over_in")),
            ((1, "over_out"), (0, "over_in")),
        ]


class TestBuiltin:
    def test_names(self):
        assert builtin_names() == list(BUILTIN_DIAGRAMS)
        assert set(builtin_names()) == {
            "1_1^l",
            "3_1^k",
            "3_1^k_kinked",
            "4_1^k",
            "5_4^k",
            "K1",
            "K2",
            "K3",
        }

    @pytest.mark.parametrize(
        "name, n_arcs, n_singular",
        [
            ("1_1^l", 3, 1),
            ("3_1^k", 4, 1),
            ("3_1^k_kinked", 5, 1),
            ("4_1^k", 6, 1),
            ("5_4^k", 7, 1),
            ("K1", 4, 1),
            ("K2", 5, 2),
            ("K3", 6, 3),
        ],
    )
    def test_shapes(self, name, n_arcs, n_singular):
        D = builtin(name)
        assert isinstance(D, SingularDiagram)
        assert D.name == name
        assert len(D.arcs) == n_arcs
        kinds = [v.kind for v in D.vertices]
        assert kinds.count(VertexKind.SINGULAR) == n_singular

    def test_unknown(self):
        with pytest.raises(UnknownName, match="Unknown name '8_1'. Known names are: 1_1"):
            _ = builtin("8_1")
