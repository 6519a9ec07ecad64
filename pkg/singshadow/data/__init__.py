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

"""Packaged singquandles, shadows and singular knot diagrams.

The linear structures over Z_6, Z_10 and Z_12 fail some compatibility
equation of an oriented singquandle. Their files are marked non-strict
and the accessors silence the
:class:`~singshadow.exceptions.AxiomWarning` this would give.
"""

import os
from pathlib import Path
from typing import List
import warnings

from singshadow.algebra import FiniteSingquandle
from singshadow.diagram import SingularDiagram, builtin
from singshadow.diagram import builtin_names as _diagram_names
from singshadow.exceptions import AxiomWarning, UnknownName
from singshadow.io._io import load
from singshadow.shadow import ShadowStructure


__all__ = [
    "builtin_names",
    "diagram",
    "shadow",
    "shadow_z10_z4",
    "shadow_z12_z8",
    "shadow_z6_z2",
    "shadow_z8_w",
    "shadow_z8_z4",
    "shadow_z8_z6",
    "singquandle",
    "z10_a3b4c6",
    "z12_a5b5c10",
    "z4_a3b2c3",
    "z6_a5b2c1",
    "z8_a3b7c6",
    "z8_a5b3c4",
]


package_data_path = Path(os.path.abspath(os.path.dirname(__file__)))

_STRUCTURES = (
    "z4_a3b2c3",
    "z6_a5b2c1",
    "z8_a3b7c6",
    "z8_a5b3c4",
    "z10_a3b4c6",
    "z12_a5b5c10",
)
_SHADOWS = (
    "shadow_z6_z2",
    "shadow_z8_z4",
    "shadow_z8_w",
    "shadow_z10_z4",
    "shadow_z8_z6",
    "shadow_z12_z8",
)


def _load(filename: str, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AxiomWarning)
        return load(str(package_data_path / filename), **kwargs)


def z4_a3b2c3(**kwargs) -> FiniteSingquandle:
    """Z_4 with x∗y = 3x - 2y, R₁(x, y) = 2x + 3y and
    R₂(x, y) = x, which colors 1_1^l in 16 ways.

    Parameters
    ----------
    kwargs
        Keyword arguments passed to :func:`~singshadow.io.load`.

    Returns
    -------
    FiniteSingquandle
    """
    return _load("singquandles/z4_a3b2c3.json", **kwargs)


def z6_a5b2c1(**kwargs) -> FiniteSingquandle:
    """Z_6 with x∗y = 5x - 4y, R₁(x, y) = 2x + y and R₂(x, y) = 5x + 4y,
    host of :func:`shadow_z6_z2`.
    """
    return _load("singquandles/z6_a5b2c1.json", **kwargs)


def z8_a3b7c6(**kwargs) -> FiniteSingquandle:
    """Z_8 with x∗y = 3x - 2y, R₁(x, y) = 7x + 6y and R₂(x, y) = 2x + 3y,
    which colors both 4_1^k and 5_4^k in 16 ways.
    """
    return _load("singquandles/z8_a3b7c6.json", **kwargs)


def z8_a5b3c4(**kwargs) -> FiniteSingquandle:
    """Z_8 with x∗y = 5x - 4y, R₁(x, y) = 3x + 4y and R₂(x, y) = 4x + 3y,
    host of :func:`shadow_z8_z4` and :func:`shadow_z8_w`.
    """
    return _load("singquandles/z8_a5b3c4.json", **kwargs)


def z10_a3b4c6(**kwargs) -> FiniteSingquandle:
    """Z_10 with x∗y = 3x - 2y, R₁(x, y) = 4x + 6y and R₂(x, y) = 8x + 2y,
    which colors 3_1^k only trivially.
    """
    return _load("singquandles/z10_a3b4c6.json", **kwargs)


def z12_a5b5c10(**kwargs) -> FiniteSingquandle:
    """Z_12 with x∗y = 5x - 4y, R₁(x, y) = 5x + 10y and
    R₂(x, y) = 2x + y, coloring each trefoil variant K1, K2 and K3 in
    four ways.
    """
    return _load("singquandles/z12_a5b5c10.json", **kwargs)


def shadow_z6_z2(**kwargs) -> ShadowStructure:
    """X = Z_2 over :func:`z6_a5b2c1` with the trivial action."""
    return _load("shadows/shadow_z6_z2.json", **kwargs)


def shadow_z8_z4(**kwargs) -> ShadowStructure:
    """X = Z_4 over :func:`z8_a5b3c4` with x·s = x + 2s + s²."""
    return _load("shadows/shadow_z8_z4.json", **kwargs)


def shadow_z8_w(**kwargs) -> ShadowStructure:
    """X = Z_4 over :func:`z8_a5b3c4` with x·s = -x. It has a different
    shadow polynomial than :func:`shadow_z8_z4`.
    """
    return _load("shadows/shadow_z8_w.json", **kwargs)


def shadow_z10_z4(**kwargs) -> ShadowStructure:
    """X = Z_4 over :func:`z10_a3b4c6` with x·s = 2 + x + 2x²."""
    return _load("shadows/shadow_z10_z4.json", **kwargs)


def shadow_z8_z6(**kwargs) -> ShadowStructure:
    """X = Z_6 over :func:`z8_a3b7c6` where odd elements add 3 and even
    elements act trivially. Its shadow polynomial invariant tells 4_1^k
    and 5_4^k apart.
    """
    return _load("shadows/shadow_z8_z6.json", **kwargs)


def shadow_z12_z8(**kwargs) -> ShadowStructure:
    """X = Z_8 over :func:`z12_a5b5c10` with x·s = 4 - x for s = 1 mod 4
    and x·s = -x otherwise.
    """
    return _load("shadows/shadow_z12_z8.json", **kwargs)


def builtin_names(kind: str = "diagrams") -> List[str]:
    """Names of packaged objects of a kind, "diagrams", "structures" or
    "shadows".
    """
    if kind == "diagrams":
        return _diagram_names()
    elif kind == "structures":
        return list(_STRUCTURES)
    elif kind == "shadows":
        return list(_SHADOWS)
    raise ValueError(
        f"kind must be 'diagrams', 'structures' or 'shadows', not '{kind}'"
    )


def singquandle(name: str, **kwargs) -> FiniteSingquandle:
    """Packaged singquandle by name, e.g. "z8_a3b7c6"."""
    if name not in _STRUCTURES:
        raise UnknownName(name, _STRUCTURES)
    return _load(f"singquandles/{name}.json", **kwargs)


def shadow(name: str, **kwargs) -> ShadowStructure:
    """Packaged shadow by name, e.g. "shadow_z8_z6"."""
    if name not in _SHADOWS:
        raise UnknownName(name, _SHADOWS)
    return _load(f"shadows/{name}.json", **kwargs)


def diagram(name: str) -> SingularDiagram:
    """Packaged diagram by name, see :func:`~singshadow.diagram.builtin`."""
    return builtin(name)
