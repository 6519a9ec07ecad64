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

"""Isomorphisms between finite singquandles by backtracking."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from singshadow._util import compute_in_order
from singshadow.algebra.singquandle import FiniteSingquandle, profiles

__all__ = ["isomorphisms"]

_logger = logging.getLogger(__name__)

Bijection = Tuple[int, ...]


def _extend(
    f: np.ndarray,
    g: np.ndarray,
    source: np.ndarray,
    target: np.ndarray,
    compatible: np.ndarray,
) -> bool:
    """Assign every image forced by the assigned elements, in place.

    ``source`` and ``target`` hold the ∗, R₁ and R₂ tables stacked into
    shape (3, n, n). Returns False on a conflict.
    """
    while True:
        assigned = np.flatnonzero(f >= 0)
        images = f[assigned]
        src = source[:, assigned[:, None], assigned[None, :]].ravel()
        dst = target[:, images[:, None], images[None, :]].ravel()
        current = f[src]
        if np.any((current >= 0) & (current != dst)):
            return False
        unassigned = current < 0
        if not unassigned.any():
            return True
        for s, d in zip(src[unassigned], dst[unassigned]):
            if f[s] >= 0:
                if f[s] != d:
                    return False
                continue
            if g[d] >= 0 or not compatible[s, d]:
                return False
            f[s] = d
            g[d] = s


def _search(f, g, source, target, compatible) -> List[Bijection]:
    free = np.flatnonzero(f < 0)
    if free.size == 0:
        return [tuple(int(v) for v in f)]
    x = free[0]
    found = []
    for y in np.flatnonzero(compatible[x] & (g < 0)):
        f2 = f.copy()
        g2 = g.copy()
        f2[x] = y
        g2[y] = x
        if _extend(f2, g2, source, target, compatible):
            found.extend(_search(f2, g2, source, target, compatible))
    return found


def _search_from(first_image: int, n: int, source, target, compatible):
    f = np.full(n, -1, dtype=np.int64)
    g = np.full(n, -1, dtype=np.int64)
    f[0] = first_image
    g[first_image] = 0
    if not _extend(f, g, source, target, compatible):
        return []
    return _search(f, g, source, target, compatible)


def isomorphisms(
    Q: FiniteSingquandle, Q2: FiniteSingquandle, workers: Optional[int] = None
) -> List[Bijection]:
    """All bijections from ``Q`` to ``Q2`` preserving ∗, R₁ and R₂.

    Candidate images are restricted to elements with equal
    :func:`~singshadow.algebra.profiles`, and each choice propagates
    through the tables before branching further.

    Parameters
    ----------
    Q, Q2
        Structures to compare.
    workers
        Number of threads, one task per image of the first element.
        Default is to run synchronously.

    Returns
    -------
    bijections
        Tuples ``f`` with ``f[i]`` the index in ``Q2`` of element ``i``
        of ``Q``, sorted lexicographically. Empty if the structures are
        not isomorphic.
    """
    n = Q.size
    if Q2.size != n:
        return []
    p1 = [p.as_tuple() for p in profiles(Q)]
    p2 = [p.as_tuple() for p in profiles(Q2)]
    if sorted(p1) != sorted(p2):
        _logger.debug("Profile multisets differ, structures are not isomorphic")
        return []
    compatible = np.array([[a == b for b in p2] for a in p1], dtype=bool)
    source = Q.tables[[0, 2, 3]]
    target = Q2.tables[[0, 2, 3]]
    first_images = np.flatnonzero(compatible[0]).tolist()
    per_task = compute_in_order(
        _search_from,
        [(y, n, source, target, compatible) for y in first_images],
        workers,
    )
    found = sorted(f for task in per_task for f in task)
    _logger.info(f"Found {len(found)} isomorphisms from '{Q.name}' to '{Q2.name}'")
    return found
