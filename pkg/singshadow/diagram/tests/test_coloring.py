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

import pytest

from singshadow import data
from singshadow.conftest import brute_force_colorings, labelled
from singshadow.diagram import (
    ColoringAssignment,
    VertexKind,
    builtin,
    builtin_names,
    colorings,
)

# Printed Hom sets, as labels in arc order
HOM_1_1L = [
    ("1", "1", "1"), ("1", "2", "0"), ("1", "3", "3"), ("1", "0", "2"),
    ("2", "1", "3"), ("2", "2", "2"), ("2", "3", "1"), ("2", "0", "0"),
    ("3", "1", "1"), ("3", "2", "0"), ("3", "3", "3"), ("3", "0", "2"),
    ("0", "1", "3"), ("0", "2", "2"), ("0", "3", "1"), ("0", "0", "0"),
]  # fmt: skip

HOM_4_1K = [
    (1, 7, 1, 7, 3, 5), (1, 3, 1, 3, 7, 5), (2, 2, 2, 2, 2, 2), (2, 6, 2, 6, 6, 2),
    (3, 5, 3, 5, 1, 7), (3, 1, 3, 1, 5, 7), (4, 0, 4, 0, 0, 4), (4, 4, 4, 4, 4, 4),
    (5, 3, 5, 3, 7, 1), (5, 7, 5, 7, 3, 1), (6, 6, 6, 6, 6, 6), (6, 2, 6, 2, 2, 6),
    (7, 1, 7, 1, 5, 3), (7, 5, 7, 5, 1, 3), (0, 4, 0, 4, 4, 0), (0, 0, 0, 0, 0, 0),
]  # fmt: skip

HOM_5_4K = [
    (2, 2, 2, 2, 2, 2, 2), (2, 4, 6, 0, 6, 2, 2), (2, 6, 2, 6, 2, 2, 2),
    (2, 0, 6, 4, 6, 2, 2), (4, 2, 0, 6, 0, 4, 4), (4, 4, 4, 4, 4, 4, 4),
    (4, 6, 0, 2, 0, 4, 4), (4, 0, 4, 0, 4, 4, 4), (6, 2, 6, 2, 6, 6, 6),
    (6, 4, 2, 0, 2, 6, 6), (6, 6, 6, 6, 6, 6, 6), (6, 0, 2, 4, 2, 6, 6),
    (0, 2, 4, 6, 4, 0, 0), (0, 4, 0, 4, 0, 0, 0), (0, 6, 4, 2, 4, 0, 0),
    (0, 0, 0, 0, 0, 0, 0),
]  # fmt: skip


def _as_labels(tuples):
    return {tuple(str(v) for v in t) for t in tuples}


class TestColoringAssignment:
    def test_access(self, z4, diagram):
        f = colorings(diagram, z4)[1]
        assert isinstance(f, ColoringAssignment)
        assert f.arcs == ("x", "y", "z")
        assert f["y"] == z4.index("2")
        assert f.as_dict() == {"x": 0, "y": 1, "z": 3}
        assert f.labels(z4) == ("1", "2", "0")
        assert f.image == {0, 1, 3}
        with pytest.raises(KeyError, match="'w' is not a colored arc"):
            _ = f["w"]


class TestColorings:
    def test_1_1l(self, z4, diagram):
        found = colorings(diagram, z4)
        assert labelled(z4, found) == HOM_1_1L

    def test_4_1k_and_5_4k(self, z8_pair):
        found = colorings(builtin("4_1^k"), z8_pair)
        assert len(found) == 16
        assert set(labelled(z8_pair, found)) == _as_labels(HOM_4_1K)
        found = colorings(builtin("5_4^k"), z8_pair)
        assert len(found) == 16
        assert set(labelled(z8_pair, found)) == _as_labels(HOM_5_4K)

    def test_3_1k_only_trivially(self, z10):
        found = colorings(builtin("3_1^k"), z10)
        assert labelled(z10, found) == [("0", "0", "0", "0")]

    def test_trefoil_variants(self, z12):
        k1 = labelled(z12, colorings(builtin("K1"), z12))
        assert set(k1) == _as_labels((a, a, b, b) for a in (0, 6) for b in (0, 6))
        k2 = labelled(z12, colorings(builtin("K2"), z12))
        expected = [(k, k, 3 * k % 12, 3 * k % 12, 3 * k % 12) for k in (0, 3, 6, 9)]
        assert set(k2) == _as_labels(expected)
        k3 = labelled(z12, colorings(builtin("K3"), z12))
        expected = [(a, b, b, b, a, a) for a in (0, 6) for b in (0, 6)]
        assert set(k3) == _as_labels(expected)

    def test_sorted_by_index(self, z8_pair):
        found = colorings(builtin("5_4^k"), z8_pair)
        values = [f.values for f in found]
        assert values == sorted(values)
        assert found == sorted(found)

    @pytest.mark.parametrize("workers", [2, 5])
    def test_workers_do_not_change_result(self, z8_pair, workers):
        D = builtin("4_1^k")
        assert colorings(D, z8_pair, workers=workers) == colorings(D, z8_pair)

    @pytest.mark.parametrize(
        "structure",
        ["z4_a3b2c3", "z6_a5b2c1", "z8_a3b7c6", "z8_a5b3c4"],
    )
    def test_brute_force_oracle(self, structure):
        Q = data.singquandle(structure)
        for name in builtin_names():
            D = builtin(name)
            found = [f.values for f in colorings(D, Q)]
            assert found == brute_force_colorings(D, Q), name

    def test_constant_colorings(self, trivial_singquandle, z4):
        # R1(x, x) = R2(x, x) = x when b + c = 1
        for Q in (trivial_singquandle, z4):
            for name in builtin_names():
                found = {f.values for f in colorings(builtin(name), Q)}
                n_arcs = len(builtin(name).arcs)
                assert all((x,) * n_arcs in found for x in range(Q.size))

    @pytest.mark.parametrize("structure", data.builtin_names("structures"))
    @pytest.mark.parametrize("name", builtin_names())
    def test_constant_colorings_match_fixed_points(self, structure, name):
        # Constant x colors D iff every operation met at its vertices fixes (x, x)
        Q = data.singquandle(structure)
        D = builtin(name)
        tables = [Q.star, Q.bar_star]
        if any(v.kind is VertexKind.SINGULAR for v in D.vertices):
            tables += [Q.r1, Q.r2]
        found = {f.values for f in colorings(D, Q)}
        for x in range(Q.size):
            fixed = all(table[x, x] == x for table in tables)
            assert ((x,) * len(D.arcs) in found) == fixed
