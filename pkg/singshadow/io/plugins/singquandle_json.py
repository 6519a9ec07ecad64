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

"""Read/write support for finite singquandles in a JSON format.

A structure is given either by its tables of element labels,

.. code-block:: json

    {"name": "Z3", "elements": ["1", "2", "0"],
     "star": [[...]], "r1": [[...]], "r2": [[...]]}

with an optional "bar_star" table, or as a linear structure over Z_n,

.. code-block:: json

    {"name": "Z4", "linear": {"modulus": 4, "a": 3, "b": 2, "c": 3}}

A top-level ``"strict": false`` loads a structure failing some
compatibility equation with a warning instead of an error.
"""

import json
import os
from typing import Optional

import numpy as np

from singshadow.algebra import (
    FiniteSingquandle,
    LinearSingquandleSpec,
    build_from_tables,
    build_linear,
)


# Plugin characteristics
# ----------------------
format_name = "singquandle_json"
description = "Read/write support for finite oriented singquandles in JSON."
# Recognised file extension
file_extensions = ["json"]
default_extension = 0
# Writing capabilities
writes = True
object_type = FiniteSingquandle

# Top-level keys, any of which identifies the format
footprint = ["star", "linear"]


def _indices(table, index: dict, what: str) -> np.ndarray:
    try:
        return np.array([[index[str(v)] for v in row] for row in table], dtype=np.int64)
    except KeyError as e:
        raise ValueError(f"Table '{what}' entry {e} is not an element")
    except TypeError:
        raise ValueError(f"Table '{what}' must be a list of rows")


def singquandle_from_dict(
    d: dict, strict: Optional[bool] = None, name: Optional[str] = None
) -> FiniteSingquandle:
    """Create a singquandle from its JSON object.

    Parameters
    ----------
    d
        Tables or linear form, see the module docstring.
    strict
        Whether a failing axiom raises. If None (default), the
        object's "strict" value is used, which defaults to True.
    name
        Used when ``d`` has no name.

    Returns
    -------
    FiniteSingquandle
    """
    if strict is None:
        strict = bool(d.get("strict", True))
    name = d.get("name", name)
    if "linear" in d:
        p = d["linear"]
        try:
            spec = LinearSingquandleSpec(
                int(p["modulus"]), int(p["a"]), int(p["b"]), int(p["c"])
            )
        except KeyError as e:
            raise ValueError(f"Linear structure is missing {e}")
        return build_linear(spec, strict=strict, name=name)

    for key in ("elements", "star", "r1", "r2"):
        if key not in d:
            raise ValueError(f"Singquandle is missing '{key}'")
    elements = [str(e) for e in d["elements"]]
    index = {label: i for i, label in enumerate(elements)}
    tables = {
        key: _indices(d[key], index, key)
        for key in ("star", "r1", "r2", "bar_star")
        if key in d
    }
    return build_from_tables(
        name or "singquandle",
        elements,
        star=tables["star"],
        r1=tables["r1"],
        r2=tables["r2"],
        bar_star=tables.get("bar_star"),
        strict=strict,
    )


def singquandle_to_dict(Q: FiniteSingquandle) -> dict:
    """Tables form of ``Q`` with element labels, including "bar_star"."""
    d = {"name": Q.name, "elements": list(Q.elements)}
    for key, table in zip(("star", "bar_star", "r1", "r2"), Q.tables):
        d[key] = [list(Q.labels(row)) for row in table]
    if Q.axiom_report is not None and not Q.axiom_report.passed:
        d["strict"] = False
    return d


def file_reader(filename: str, strict: Optional[bool] = None, **kwargs):
    """Read a singquandle from a JSON file.

    Parameters
    ----------
    filename
        Path to the file.
    strict
        Overrides the file's "strict" value if given.
    kwargs
        Not used.

    Returns
    -------
    FiniteSingquandle
    """
    with open(filename, encoding="utf-8") as f:
        d = json.load(f)
    default_name = os.path.splitext(os.path.basename(filename))[0]
    return singquandle_from_dict(d, strict=strict, name=default_name)


def file_writer(filename: str, Q: FiniteSingquandle):
    with open(filename, mode="w", encoding="utf-8") as f:
        json.dump(singquandle_to_dict(Q), f, indent=2)
        f.write("\n")
