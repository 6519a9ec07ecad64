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
import os
import tempfile
from typing import List, Tuple

import numpy as np
import pytest

import singshadow as ss
from singshadow.algebra import LinearSingquandleSpec, build_linear
from singshadow.diagram import VertexKind


# ------------------------- Helper functions ------------------------- #


def brute_force_colorings(D, Q) -> List[Tuple[int, ...]]:
    """All colorings of a diagram found by checking every assignment of
    elements to arcs, sorted lexicographically.

    Used as an oracle for the backtracking search. The crossing
    relations are read directly from the vertex roles.
    """
    n = Q.size
    n_arcs = len(D.arcs)
    index = {label: i for i, label in enumerate(D.arcs)}
    relations = []
    for vertex in D.vertices:
        r = {role: index[arc] for role, arc in vertex.roles.items()}
        if vertex.kind is VertexKind.SINGULAR:
            relations.append((Q.r1, r["left_out"], r["left_in"], r["right_in"]))
            relations.append((Q.r2, r["right_out"], r["left_in"], r["right_in"]))
        else:
            table = Q.star if vertex.kind is VertexKind.POSITIVE else Q.bar_star
            relations.append((table, r["under_out"], r["under_in"], r["over_in"]))
            relations.append((None, r["over_out"], r["over_in"], r["over_in"]))

    found = []
    # One block per color of the first arc to keep memory small
    rest = n ** (n_arcs - 1)
    for first in range(n):
        values = np.empty((rest, n_arcs), dtype=np.int64)
        values[:, 0] = first
        if n_arcs > 1:
            values[:, 1:] = np.stack(
                np.unravel_index(np.arange(rest), (n,) * (n_arcs - 1)), axis=1
            )
        ok = np.ones(rest, dtype=bool)
        for table, out, a, b in relations:
            if table is None:
                ok &= values[:, out] == values[:, a]
            else:
                ok &= values[:, out] == table[values[:, a], values[:, b]]
        found.extend(tuple(int(v) for v in row) for row in values[ok])
    return sorted(found)


def labelled(Q, colorings) -> List[Tuple[str, ...]]:
    """Colorings as tuples of element labels."""
    return [tuple(Q.labels(f.values)) for f in colorings]


def write_json(directory, filename: str, d: dict) -> str:
    path = os.path.join(str(directory), filename)
    with open(path, mode="w", encoding="utf-8") as f:
        json.dump(d, f)
    return path


# ----------------------------- Fixtures ----------------------------- #


@pytest.fixture
def trivial_singquandle():
    """Three elements with x∗y = x, R₁(x, y) = y and R₂(x, y) = x."""
    return build_linear(LinearSingquandleSpec(3, 1, 0, 1), name="trivial")


@pytest.fixture
def z4():
    return ss.data.z4_a3b2c3()


@pytest.fixture
def z6():
    return ss.data.z6_a5b2c1()


@pytest.fixture
def z8_pair():
    """Host of both 4_1^k and 5_4^k colorings."""
    return ss.data.z8_a3b7c6()


@pytest.fixture
def z8():
    return ss.data.z8_a5b3c4()


@pytest.fixture
def z10():
    return ss.data.z10_a3b4c6()


@pytest.fixture
def z12():
    return ss.data.z12_a5b5c10()


@pytest.fixture
def shadow_z6_z2():
    return ss.data.shadow_z6_z2()


@pytest.fixture
def shadow_z8_z4():
    return ss.data.shadow_z8_z4()


@pytest.fixture
def shadow_z8_w():
    return ss.data.shadow_z8_w()


@pytest.fixture
def shadow_z10_z4():
    return ss.data.shadow_z10_z4()


@pytest.fixture
def shadow_z8_z6():
    return ss.data.shadow_z8_z6()


@pytest.fixture
def shadow_z12_z8():
    return ss.data.shadow_z12_z8()


@pytest.fixture(params=["1_1^l"])
def diagram(request):
    """Packaged diagram, the name given as parameter."""
    return ss.data.diagram(request.param)


@pytest.fixture
def diagram_dict():
    """JSON object of 1_1^l written with split over arcs."""
    return {
        "name": "1_1^l",
        "vertices": [
            {
                "kind": "singular",
                "left_in": "x",
                "right_in": "y",
                "left_out": "z",
                "right_out": "x",
            },
            {
                "kind": "positive",
                "under_in": "z",
                "over_in": "x",
                "under_out": "y",
                "over_out": "x",
            },
        ],
    }


@pytest.fixture
def broken_singquandle_dict():
    """A quandle over Z_3 with R₁ and R₂ failing the compatibility
    equations.
    """
    return {
        "name": "broken",
        "elements": ["a", "b", "c"],
        "star": [["a", "c", "b"], ["c", "b", "a"], ["b", "a", "c"]],
        "r1": [["a", "a", "a"], ["a", "a", "a"], ["a", "a", "a"]],
        "r2": [["a", "b", "c"], ["a", "b", "c"], ["a", "b", "c"]],
    }


@pytest.fixture
def save_path_json():
    """Temporary JSON file path in a temporary directory."""
    with tempfile.TemporaryDirectory() as tmp:
        yield os.path.join(tmp, "object_temp.json")


# ---------------------- pytest doctest-modules ---------------------- #


@pytest.fixture(autouse=True)
def doctest_setup_teardown(request):
    # Setup
    temporary_directory = tempfile.TemporaryDirectory()
    original_directory = os.getcwd()
    os.chdir(temporary_directory.name)
    yield

    # Teardown
    os.chdir(original_directory)
    temporary_directory.cleanup()


@pytest.fixture(autouse=True)
def import_to_namespace(doctest_namespace):
    dir_path = os.path.dirname(__file__)
    doctest_namespace["DATA_DIR"] = os.path.join(dir_path, "data")
