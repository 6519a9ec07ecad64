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

"""Read/write support for singquandle shadows in a JSON format.

The "host" is the name of a packaged singquandle, a path relative to
the shadow file, or an inline singquandle object. The action is given
either as a matrix of labels of X,

.. code-block:: json

    {"name": "X", "host": "z8_a5b3c4", "x_elements": ["1", "2", "3", "0"],
     "matrix": [[...]]}

or as a polynomial of degree at most two,

.. code-block:: json

    {"host": "z10_a3b4c6",
     "polynomial_action": {"modulus": 4, "coeffs": [2, 1, 0, 2, 0, 0]}}

with coefficients of 1, x, s, x², s² and xs.
"""

import json
import os
from typing import Optional

from singshadow.algebra import FiniteSingquandle
from singshadow.io.plugins.singquandle_json import (
    singquandle_from_dict,
    singquandle_to_dict,
)
from singshadow.shadow import (
    PolynomialActionSpec,
    ShadowStructure,
    build_polynomial_action,
    build_shadow,
)


# Plugin characteristics
# ----------------------
format_name = "shadow_json"
description = "Read/write support for singquandle shadows in JSON."
# Recognised file extension
file_extensions = ["json"]
default_extension = 0
# Writing capabilities
writes = True
object_type = ShadowStructure

# Top-level keys, any of which identifies the format
footprint = ["host"]


def _host(value, directory: str, strict: Optional[bool] = None) -> FiniteSingquandle:
    kwargs = {} if strict is None else {"strict": strict}
    if isinstance(value, dict):
        return singquandle_from_dict(value, **kwargs)
    if not isinstance(value, str):
        raise ValueError("Shadow 'host' must be a name, a path or an object")
    path = os.path.join(directory, value)
    if os.path.isfile(path):
        from singshadow.io._io import load

        return load(path, **kwargs)

    from singshadow import data

    return data.singquandle(value, **kwargs)


def shadow_from_dict(
    d: dict,
    strict: Optional[bool] = None,
    name: Optional[str] = None,
    directory: str = ".",
) -> ShadowStructure:
    """Create a shadow from its JSON object.

    Parameters
    ----------
    d
        Object with a "host" and an action, see the module docstring.
    strict
        Whether a failing shadow axiom raises. If None (default), the
        object's "strict" value is used, which defaults to True. A
        lenient shadow also loads its host leniently.
    name
        Used when ``d`` has no name.
    directory
        Directory relative host paths are resolved against.

    Returns
    -------
    ShadowStructure
    """
    if "host" not in d:
        raise ValueError("Shadow is missing 'host'")
    if strict is None:
        strict = bool(d.get("strict", True))
    name = d.get("name", name)
    host = _host(d["host"], directory, strict=None if strict else False)
    if "polynomial_action" in d:
        p = d["polynomial_action"]
        try:
            spec = PolynomialActionSpec(int(p["modulus"]), tuple(p["coeffs"]))
        except KeyError as e:
            raise ValueError(f"Polynomial action is missing {e}")
        return build_polynomial_action(host, spec, strict=strict, name=name)
    for key in ("x_elements", "matrix"):
        if key not in d:
            raise ValueError(f"Shadow is missing '{key}'")
    return build_shadow(host, d["x_elements"], d["matrix"], name=name, strict=strict)


def shadow_to_dict(sh: ShadowStructure) -> dict:
    """Matrix form of ``sh`` with its host inline."""
    d = {
        "name": sh.name,
        "host": singquandle_to_dict(sh.host),
        "x_elements": list(sh.x_elements),
        "matrix": [list(sh.labels(row)) for row in sh.action],
    }
    if sh.axiom_report is not None and not sh.axiom_report.passed:
        d["strict"] = False
    return d


def file_reader(filename: str, strict: Optional[bool] = None, **kwargs):
    """Read a shadow from a JSON file.

    Parameters
    ----------
    filename
        Path to the file.
    strict
        Overrides the file's "strict" value of the shadow if given.
    kwargs
        Not used.

    Returns
    -------
    ShadowStructure
    """
    with open(filename, encoding="utf-8") as f:
        d = json.load(f)
    directory, basename = os.path.split(os.path.abspath(filename))
    return shadow_from_dict(
        d, strict=strict, name=os.path.splitext(basename)[0], directory=directory
    )


def file_writer(filename: str, sh: ShadowStructure):
    with open(filename, mode="w", encoding="utf-8") as f:
        json.dump(shadow_to_dict(sh), f, indent=2)
        f.write("\n")
