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

"""Counting invariants of singular links."""

import logging
from typing import List, Optional

from singshadow.algebra import FiniteSingquandle
from singshadow.diagram import (
    ColoringAssignment,
    SingularDiagram,
    colorings,
    region_coloring,
    trace_regions,
)
from singshadow.exceptions import Disconnected, NonPlanarDiagram
from singshadow.shadow import ShadowStructure

__all__ = ["counting", "shadow_counting"]

_logger = logging.getLogger(__name__)


def counting(
    D: SingularDiagram,
    Q: FiniteSingquandle,
    workers: Optional[int] = None,
    found: Optional[List[ColoringAssignment]] = None,
) -> int:
    """Number of colorings of ``D`` by ``Q``, or of ``found`` if the
    colorings are already known.

    Examples
    --------
    >>> from singshadow import data
    >>> from singshadow.invariants import counting
    >>> counting(data.diagram("1_1^l"), data.z4_a3b2c3())
    16
    """
    if found is None:
        found = colorings(D, Q, workers=workers)
    return len(found)


def shadow_counting(
    D: SingularDiagram,
    sh: ShadowStructure,
    workers: Optional[int] = None,
    cross_check: bool = True,
    found: Optional[List[ColoringAssignment]] = None,
) -> int:
    """Number of colorings of ``D`` together with its regions by the
    shadow ``sh``.

    Each coloring of the arcs extends in exactly |X| ways, one per color
    of a fixed region, so this is |X| times the count of the host.

    Parameters
    ----------
    D
        Diagram.
    sh
        Shadow.
    workers
        Passed on to :func:`~singshadow.diagram.colorings`.
    cross_check
        Whether to color the regions for every coloring and every base
        color, which raises
        :class:`~singshadow.exceptions.InconsistentRegionColoring` if an
        extension fails. Skipped for diagrams without traceable faces.
        Default is True.
    found
        Colorings of ``D`` by the host, computed if not given.

    Returns
    -------
    int
    """
    if found is None:
        found = colorings(D, sh.host, workers=workers)
    if cross_check:
        try:
            region_map = trace_regions(D)
        except (Disconnected, NonPlanarDiagram) as e:
            _logger.debug(f"Skipping region check of '{D.name}': {e}")
        else:
            for f in found:
                for x0 in range(sh.size):
                    region_coloring(D, sh, f, x0=x0, region_map=region_map)
    return sh.size * len(found)
