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

"""Polynomial invariants of singular links: the subsingquandle
polynomial invariant and the shadow polynomial invariant SP.
"""

import logging
from typing import List, Optional

from singshadow._util import compute_in_order
from singshadow.algebra import FiniteSingquandle, closure, ssqp
from singshadow.diagram import (
    ColoringAssignment,
    RegionMap,
    SingularDiagram,
    colorings,
    region_coloring,
    trace_regions,
)
from singshadow.exceptions import (
    Disconnected,
    NonPlanarDiagram,
    ShadowImageMismatch,
)
from singshadow.polynomial import InvariantMultiset, MultiPoly
from singshadow.shadow import ShadowStructure, Subshadow, forward_closure, subsp
from singshadow.shadow.shadow_structure import _fixed_polynomial

__all__ = ["OM_MODES", "shadow_image", "sp_invariant", "ssqp_invariant"]

_logger = logging.getLogger(__name__)

OM_MODES = ("closure", "regions")


def ssqp_invariant(
    D: SingularDiagram,
    Q: FiniteSingquandle,
    workers: Optional[int] = None,
    found: Optional[List[ColoringAssignment]] = None,
) -> InvariantMultiset:
    """Multiset of the subsingquandle polynomials of the images of all
    colorings of ``D`` by ``Q``, or of ``found`` if given.

    The image of a coloring is the closure of its arc colors.
    """
    if found is None:
        found = colorings(D, Q, workers=workers)
    multiset = InvariantMultiset()
    for f in found:
        multiset.add(ssqp(Q, closure(Q, f.image)))
    return multiset


def _planar_data(D: SingularDiagram) -> Optional[RegionMap]:
    try:
        return trace_regions(D)
    except (Disconnected, NonPlanarDiagram) as e:
        _logger.debug(f"No region data for '{D.name}': {e}")
        return None


def shadow_image(
    sh: ShadowStructure,
    f: ColoringAssignment,
    x0: int,
    diagram: Optional[SingularDiagram] = None,
    region_map: Optional[RegionMap] = None,
) -> Subshadow:
    """Subshadow generated by a shadow coloring.

    The singquandle part is the image of ``f``, the closure of its arc
    colors. The X part is the closure of {``x0``} under that image,
    which is the orbit of ``x0``.

    Parameters
    ----------
    sh
        Shadow whose host colored the diagram.
    f
        Coloring of the arcs.
    x0
        Index in X of the color of face 0.
    diagram
        If given, the faces of the diagram are colored from ``x0`` and
        the closure of all face colors is compared with the orbit.
    region_map
        Faces of ``diagram``, traced if not given.

    Returns
    -------
    Subshadow

    Raises
    ------
    ShadowImageMismatch
        If the closure of the face colors differs from the orbit.
    """
    s_subset = closure(sh.host, f.image)
    x_subset = forward_closure(sh, [x0], s_subset)
    if diagram is not None:
        if region_map is None:
            region_map = trace_regions(diagram)
        colors = region_coloring(diagram, sh, f, x0=x0, region_map=region_map)
        from_regions = forward_closure(sh, colors.values(), s_subset)
        if from_regions != x_subset:
            raise ShadowImageMismatch(
                f"Closure of the region colors {sh.labels(sorted(from_regions))} "
                f"differs from the orbit {sh.labels(sorted(x_subset))} of "
                f"'{sh.label(x0)}' in '{diagram.name}'"
            )
    return Subshadow(s_subset, x_subset)


def _sp_terms(
    D: SingularDiagram,
    sh: ShadowStructure,
    f: ColoringAssignment,
    om: str,
    region_map: Optional[RegionMap],
) -> List[MultiPoly]:
    terms = []
    for x0 in range(sh.size):
        if om == "regions":
            colors = region_coloring(D, sh, f, x0=x0, region_map=region_map)
            s_subset = closure(sh.host, f.image)
            terms.append(_fixed_polynomial(sh, s_subset, colors.values()))
        else:
            diagram = D if region_map is not None else None
            sub = shadow_image(sh, f, x0, diagram=diagram, region_map=region_map)
            terms.append(subsp(sh, sub))
    return terms


def sp_invariant(
    D: SingularDiagram,
    sh: ShadowStructure,
    om: str = "closure",
    workers: Optional[int] = None,
    found: Optional[List[ColoringAssignment]] = None,
) -> InvariantMultiset:
    """Shadow polynomial invariant SP of the link of ``D``.

    Every shadow coloring, an arc coloring f with a color x0 of face 0,
    contributes the shadow polynomial of its subshadow.

    Parameters
    ----------
    D
        Diagram.
    sh
        Shadow.
    om
        "closure" (default) takes the X part as the closure of the
        region colors under the image of f, computed as the orbit of
        x0 and checked against the regions when the faces of ``D`` can
        be traced. "regions" takes the set of region colors as it is,
        which requires traceable faces.
    workers
        Number of threads handling colorings in parallel. The result
        does not depend on this.
    found
        Colorings of ``D`` by the host, computed if not given.

    Returns
    -------
    InvariantMultiset
        Total multiplicity |X| times the number of colorings.

    Examples
    --------
    >>> from singshadow import data
    >>> from singshadow.invariants import sp_invariant
    >>> from singshadow.polynomial import render_multiset
    >>> render_multiset(sp_invariant(data.diagram("4_1^k"), data.shadow_z8_z6()))
    '24*u^{t^2} + 24*u^{t} + 48*u^{2}'
    """
    if om not in OM_MODES:
        raise ValueError(f"om must be one of {OM_MODES}, not '{om}'")
    if om == "regions":
        region_map = trace_regions(D)
    else:
        region_map = _planar_data(D)
    if found is None:
        found = colorings(D, sh.host, workers=workers)
    per_coloring = compute_in_order(
        _sp_terms, [(D, sh, f, om, region_map) for f in found], workers
    )
    multiset = InvariantMultiset()
    for terms in per_coloring:
        for poly in terms:
            multiset.add(poly)
    _logger.debug(
        f"SP of '{D.name}' over '{sh.name}': {multiset.total} terms from "
        f"{len(found)} colorings"
    )
    return multiset
