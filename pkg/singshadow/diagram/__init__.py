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

"""Singular link diagrams, their colorings by singquandles and the
colorings of their regions by shadows.
"""

from singshadow.diagram.singular_diagram import (
    CLASSICAL_ROLES,
    DEFAULT_CCW,
    IN_ROLES,
    SINGULAR_ROLES,
    SemiArc,
    SingularDiagram,
    Vertex,
    VertexKind,
    diagram_from_dict,
    parse_diagram,
)
from singshadow.diagram.coloring import ColoringAssignment, colorings
from singshadow.diagram.regions import RegionMap, region_coloring, trace_regions
from singshadow.diagram.builtin import BUILTIN_DIAGRAMS, builtin, builtin_names


__all__ = [
    "BUILTIN_DIAGRAMS",
    "CLASSICAL_ROLES",
    "ColoringAssignment",
    "DEFAULT_CCW",
    "IN_ROLES",
    "RegionMap",
    "SINGULAR_ROLES",
    "SemiArc",
    "SingularDiagram",
    "Vertex",
    "VertexKind",
    "builtin",
    "builtin_names",
    "colorings",
    "diagram_from_dict",
    "parse_diagram",
    "region_coloring",
    "trace_regions",
]
