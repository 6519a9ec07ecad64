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

"""Packaged singular knot diagrams."""

import os
from typing import List

from singshadow.diagram.singular_diagram import SingularDiagram, parse_diagram
from singshadow.exceptions import UnknownName

__all__ = ["BUILTIN_DIAGRAMS", "builtin", "builtin_names"]

_DIAGRAM_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "diagrams"
)

BUILTIN_DIAGRAMS = {
    "1_1^l": "1_1l.json",
    "3_1^k": "3_1k.json",
    "3_1^k_kinked": "3_1k_kinked.json",
    "4_1^k": "4_1k.json",
    "5_4^k": "5_4k.json",
    "K1": "k1.json",
    "K2": "k2.json",
    "K3": "k3.json",
}


def builtin_names() -> List[str]:
    return list(BUILTIN_DIAGRAMS)


def builtin(name: str) -> SingularDiagram:
    """Packaged diagram by name.

    The 2-bouquet graphs 1_1^l, 3_1^k, 4_1^k and 5_4^k, the trefoil
    with one, two or three singular vertices (K1, K2, K3), and 3_1^k
    with an added positive kink.

    Raises
    ------
    UnknownName
        If there is no packaged diagram ``name``.
    """
    try:
        filename = BUILTIN_DIAGRAMS[name]
    except KeyError:
        raise UnknownName(name, builtin_names())
    with open(os.path.join(_DIAGRAM_DIR, filename), encoding="utf-8") as f:
        return parse_diagram(f.read(), name=name)
