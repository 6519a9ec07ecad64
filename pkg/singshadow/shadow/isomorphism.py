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

"""Isomorphisms of shadows, pairs (f, φ) with φ(x·s) = φ(x)·f(s)."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from singshadow.algebra import isomorphisms
from singshadow.shadow.shadow_structure import ShadowStructure, sp

__all__ = ["shadow_isomorphisms"]

_logger = logging.getLogger(__name__)

Bijection = Tuple[int, ...]


def _propagate(phi, inverse, action1, action2, compatible) -> bool:
    """Extend ``phi`` along the orbits of its assigned elements, in
    place. Returns False on a conflict.
    """
    while True:
        assigned = np.flatnonzero(phi >= 0)
        src = action1[assigned].ravel()
        dst = action2[phi[assigned]].ravel()
        current = phi[src]
        if np.any((current >= 0) & (current != dst)):
            return False
        unassigned = current < 0
        if not unassigned.any():
            return True
        for x, y in zip(src[unassigned], dst[unassigned]):
            if phi[x] >= 0:
                if phi[x] != y:
                    return False
                continue
            if inverse[y] >= 0 or not compatible[x, y]:
                return False
            phi[x] = y
            inverse[y] = x


def _equivariant_maps(
    action1: np.ndarray, action2: np.ndarray, compatible: np.ndarray
) -> List[Bijection]:
    m = action1.shape[0]
    found = []

    def search(phi, inverse):
        free = np.flatnonzero(phi < 0)
        if free.size == 0:
            found.append(tuple(int(v) for v in phi))
            return
        x = free[0]
        for y in np.flatnonzero(compatible[x] & (inverse < 0)):
            phi2 = phi.copy()
            inverse2 = inverse.copy()
            phi2[x] = y
            inverse2[y] = x
            if _propagate(phi2, inverse2, action1, action2, compatible):
                search(phi2, inverse2)

    search(np.full(m, -1, dtype=np.int64), np.full(m, -1, dtype=np.int64))
    return found


def shadow_isomorphisms(
    sh1: ShadowStructure, sh2: ShadowStructure, workers: Optional[int] = None
) -> List[Tuple[Bijection, Bijection]]:
    """All shadow isomorphisms from ``sh1`` to ``sh2``.

    Parameters
    ----------
    sh1, sh2
        Shadows to compare.
    workers
        Passed to :func:`~singshadow.algebra.isomorphisms` for the
        host search.

    Returns
    -------
    pairs
        Pairs (f, φ) of index tuples: f is an isomorphism of the hosts
        and φ a bijection of X with φ(x·s) = φ(x)·f(s). Sorted
        lexicographically; empty when the shadows are not isomorphic.
    """
    if sh1.size != sh2.size or sp(sh1) != sp(sh2):
        _logger.debug("Shadow sizes or shadow polynomials differ")
        return []
    fixed1 = sh1.action == np.arange(sh1.size)[:, None]
    fixed2 = sh2.action == np.arange(sh2.size)[:, None]
    pairs = []
    for f in isomorphisms(sh1.host, sh2.host, workers=workers):
        f_arr = np.asarray(f, dtype=np.int64)
        # x is fixed by s exactly when φ(x) is fixed by f(s)
        moved = np.zeros_like(fixed1)
        moved[:, f_arr] = fixed1
        compatible = np.all(moved[:, None, :] == fixed2[None, :, :], axis=2)
        action1 = sh1.action
        action2 = sh2.action[:, f_arr]
        for phi in _equivariant_maps(action1, action2, compatible):
            pairs.append((f, phi))
    pairs.sort()
    return pairs
