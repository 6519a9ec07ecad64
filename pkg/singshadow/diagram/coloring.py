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

"""Colorings of singular link diagrams by a finite singquandle."""

from dataclasses import dataclass
import logging
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from singshadow._util import compute_in_order
from singshadow.algebra import FiniteSingquandle
from singshadow.diagram._backtracking import _backtrack
from singshadow.diagram.singular_diagram import SingularDiagram

__all__ = ["ColoringAssignment", "colorings"]

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class ColoringAssignment:
    """Element indices assigned to the arcs of a diagram.

    ``values[i]`` is the color of ``arcs[i]``. All semi-arcs of an arc
    share its color.
    """

    arcs: Tuple[str, ...]
    values: Tuple[int, ...]

    def __getitem__(self, arc: str) -> int:
        try:
            return self.values[self.arcs.index(arc)]
        except ValueError:
            raise KeyError(f"'{arc}' is not a colored arc")

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.arcs, self.values))

    def labels(self, Q: FiniteSingquandle) -> Tuple[str, ...]:
        """Colors as element labels of ``Q``, in arc order."""
        return Q.labels(self.values)

    @property
    def image(self) -> FrozenSet[int]:
        """Colors used on the arcs. This set need not be closed, see
        :func:`~singshadow.algebra.closure`.
        """
        return frozenset(self.values)


def colorings(
    D: SingularDiagram, Q: FiniteSingquandle, workers: Optional[int] = None
) -> List[ColoringAssignment]:
    """All colorings of ``D`` by ``Q``.

    A coloring satisfies, at every vertex:

    * positive: under_out = under_in ∗ over_in
    * negative: under_out = under_in ∗̄ over_in
    * singular: left_out = R₁(left_in, right_in) and
      right_out = R₂(left_in, right_in)

    The over arc keeps its color through a classical vertex.

    Parameters
    ----------
    D
        Diagram to color.
    Q
        Coloring singquandle.
    workers
        Number of threads searching in parallel, one task per color of
        the first arc. Default is to search synchronously. The result
        does not depend on this.

    Returns
    -------
    colorings
        Sorted lexicographically by element index in arc order.

    Examples
    --------
    >>> from singshadow import data
    >>> from singshadow.diagram import builtin, colorings
    >>> Q = data.z4_a3b2c3()
    >>> found = colorings(builtin("1_1^l"), Q)
    >>> len(found)
    16
    >>> found[1].labels(Q)
    ('1', '2', '0')
    """
    n_arcs = len(D.arcs)
    if Q.size == 0:
        return []
    tables = np.array(Q.tables, dtype=np.int64)
    constraints = np.array(D.constraints, dtype=np.int64)
    arguments = []
    for value in range(Q.size):
        initial = np.full(n_arcs, -1, dtype=np.int64)
        initial[0] = value
        arguments.append((tables, constraints, initial))
    found = compute_in_order(_backtrack, arguments, workers)
    for value, rows in enumerate(found):
        _logger.debug(
            f"{rows.shape[0]} colorings of '{D.name}' with {D.arcs[0]} = "
            f"{Q.label(value)}"
        )

    rows = np.concatenate(found, axis=0)
    if rows.shape[0] > 1:
        rows = rows[np.lexsort(rows.T[::-1])]
    return [ColoringAssignment(D.arcs, tuple(int(v) for v in row)) for row in rows]
