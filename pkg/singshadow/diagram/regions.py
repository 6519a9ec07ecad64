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

"""Faces of a diagram and their colorings by a shadow."""

from collections import deque
from dataclasses import dataclass
import logging
from typing import Dict, List, Optional, Tuple

from singshadow.diagram.coloring import ColoringAssignment
from singshadow.diagram.singular_diagram import SingularDiagram
from singshadow.exceptions import (
    Disconnected,
    InconsistentRegionColoring,
    NonPlanarDiagram,
)
from singshadow.shadow import ShadowStructure

__all__ = ["RegionMap", "region_coloring", "trace_regions"]

_logger = logging.getLogger(__name__)

Corner = Tuple[int, int]


@dataclass(frozen=True)
class RegionMap:
    """Faces of the plane graph of a diagram.

    Attributes
    ----------
    faces
        Face ids 0, 1, ..., numbered in order of their first corner.
    sides
        Semi-arc label to (left face, right face), relative to the
        orientation of the semi-arc.
    corners
        Corner (vertex, position) to face, where corner ``i`` of a
        vertex lies between its ends ``ccw[i]`` and ``ccw[i + 1]``.
    boundaries
        Face to its corners in walking order.
    """

    faces: Tuple[int, ...]
    sides: Dict[str, Tuple[int, int]]
    corners: Dict[Corner, int]
    boundaries: Dict[int, Tuple[Corner, ...]]

    @property
    def n_faces(self) -> int:
        return len(self.faces)


def _n_components(D: SingularDiagram) -> int:
    parent = list(range(D.n_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for semi_arc in D.semi_arcs:
        a, b = find(semi_arc.tail[0]), find(semi_arc.head[0])
        if a != b:
            parent[a] = b
    return len({find(v) for v in range(D.n_vertices)})


def trace_regions(D: SingularDiagram) -> RegionMap:
    """Trace the faces of ``D`` by walking corners of its rotation
    system.

    From corner (v, i) the walk leaves v through end ``ccw[i + 1]``,
    follows that semi-arc and arrives at the corner of the far end.

    Raises
    ------
    Disconnected
        If the diagram has more than one connected component.
    NonPlanarDiagram
        If the number of faces is not the number of vertices plus two,
        so that the "ccw" orders do not describe a plane drawing.
    """
    n_components = _n_components(D)
    if n_components > 1:
        raise Disconnected(n_components)

    position = {}
    for v, vertex in enumerate(D.vertices):
        for i, role in enumerate(vertex.ccw):
            position[(v, role)] = (v, i)
    corners: Dict[Corner, int] = {}
    boundaries: Dict[int, Tuple[Corner, ...]] = {}
    for v in range(D.n_vertices):
        for i in range(4):
            if (v, i) in corners:
                continue
            face = len(boundaries)
            walk: List[Corner] = []
            corner = (v, i)
            while corner not in corners:
                corners[corner] = face
                walk.append(corner)
                u, j = corner
                role = D.vertices[u].ccw[(j + 1) % 4]
                corner = position[D.other_end(u, role)]
            boundaries[face] = tuple(walk)

    n_faces = len(boundaries)
    _logger.debug(f"Traced {n_faces} faces of '{D.name}'")
    if n_faces != D.n_vertices + 2:
        raise NonPlanarDiagram(n_faces, D.n_vertices)

    sides = {}
    for semi_arc in D.semi_arcs:
        u, p = position[semi_arc.tail]
        sides[semi_arc.label] = (corners[(u, p)], corners[(u, (p - 1) % 4)])
    return RegionMap(tuple(range(n_faces)), sides, corners, boundaries)


def region_coloring(
    D: SingularDiagram,
    sh: ShadowStructure,
    f: ColoringAssignment,
    base_face: int = 0,
    x0: int = 0,
    region_map: Optional[RegionMap] = None,
) -> Dict[int, int]:
    """Color the faces of ``D`` with elements of X.

    The face on the left of a semi-arc colored a gets the color of the
    face on its right acted on by a. Colors spread breadth first from
    ``base_face`` and every semi-arc is checked afterwards.

    Parameters
    ----------
    D
        Diagram.
    sh
        Shadow whose host colored ``D``.
    f
        Coloring of ``D`` by the host of ``sh``.
    base_face
        Face receiving ``x0``. Default is face 0.
    x0
        Index in X of the color of ``base_face``. Default is 0.
    region_map
        Faces of ``D``, traced if not given.

    Returns
    -------
    colors
        Face id to index in X.

    Raises
    ------
    InconsistentRegionColoring
        If some face would receive two colors. This cannot happen for
        a shadow satisfying its axioms.
    """
    if region_map is None:
        region_map = trace_regions(D)
    if base_face not in region_map.faces:
        raise ValueError(f"Face {base_face} is not a face of '{D.name}'")
    if not 0 <= x0 < sh.size:
        raise ValueError(f"x0 must be an index into X of size {sh.size}, not {x0}")

    action = sh.action
    inverse = sh.inverse_action
    neighbours: Dict[int, List[Tuple[int, int, bool]]] = {
        face: [] for face in region_map.faces
    }
    edges = []
    for semi_arc in D.semi_arcs:
        left, right = region_map.sides[semi_arc.label]
        s = f[semi_arc.arc]
        neighbours[right].append((left, s, True))
        neighbours[left].append((right, s, False))
        edges.append((left, right, s))

    colors = {base_face: x0}
    queue = deque([base_face])
    while queue:
        face = queue.popleft()
        x = colors[face]
        for other, s, forward in neighbours[face]:
            if other not in colors:
                colors[other] = int(action[x, s] if forward else inverse[x, s])
                queue.append(other)

    for left, right, s in edges:
        expected = int(action[colors[right], s])
        if colors[left] != expected:
            raise InconsistentRegionColoring(
                left, sh.label(colors[left]), sh.label(expected)
            )
    return dict(sorted(colors.items()))
