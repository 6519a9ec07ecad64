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

"""Numba kernel enumerating the colorings of a diagram.

A coloring is an integer vector with one element index per arc, where
-1 marks an unassigned arc. Relations are rows (op, out, in1, in2) of
an integer array, meaning ``color[out] = op(color[in1], color[in2])``.
"""

from numba import njit
import numpy as np

# Operation codes index the (4, n, n) stack of singquandle tables
STAR = 0
BAR = 1
R1 = 2
R2 = 3
EQUAL = 4


@njit(nogil=True)
def _propagate(state: np.ndarray, tables: np.ndarray, constraints: np.ndarray) -> bool:
    """Assign every output whose inputs are known, in place, until
    nothing changes. Returns False on a conflict.
    """
    changed = True
    while changed:
        changed = False
        for k in range(constraints.shape[0]):
            op = constraints[k, 0]
            out = constraints[k, 1]
            a = state[constraints[k, 2]]
            b = state[constraints[k, 3]]
            if a < 0 or b < 0:
                continue
            if op == EQUAL:
                value = a
            else:
                value = tables[op, a, b]
            current = state[out]
            if current < 0:
                state[out] = value
                changed = True
            elif current != value:
                return False
    return True


@njit(nogil=True)
def _first_unassigned(state: np.ndarray) -> int:
    for i in range(state.size):
        if state[i] < 0:
            return i
    return -1


@njit(nogil=True)
def _backtrack(
    tables: np.ndarray, constraints: np.ndarray, initial: np.ndarray
) -> np.ndarray:
    """All completions of ``initial`` satisfying ``constraints``.

    Depth-first search branching on the first unassigned arc, trying
    element indices in increasing order and propagating after each
    choice.

    Parameters
    ----------
    tables
        Operation tables of shape (4, n, n).
    constraints
        Relations of shape (k, 4).
    initial
        Partial coloring with -1 for free arcs.

    Returns
    -------
    found
        Colorings of shape (m, number of arcs).
    """
    n = tables.shape[1]
    n_arcs = initial.size
    found = np.empty((16, n_arcs), dtype=np.int64)
    n_found = 0

    # Every level assigns at least one arc
    states = np.empty((n_arcs + 1, n_arcs), dtype=np.int64)
    next_value = np.zeros(n_arcs + 1, dtype=np.int64)
    branch_arc = np.full(n_arcs + 1, -1, dtype=np.int64)

    states[0] = initial
    if not _propagate(states[0], tables, constraints):
        return found[:0]
    branch_arc[0] = _first_unassigned(states[0])

    depth = 0
    while depth >= 0:
        arc = branch_arc[depth]
        if arc < 0:
            if n_found == found.shape[0]:
                grown = np.empty((2 * found.shape[0], n_arcs), dtype=np.int64)
                grown[:n_found] = found[:n_found]
                found = grown
            found[n_found] = states[depth]
            n_found += 1
            depth -= 1
            continue
        value = next_value[depth]
        if value >= n:
            depth -= 1
            continue
        next_value[depth] = value + 1
        child = states[depth + 1]
        child[:] = states[depth]
        child[arc] = value
        if _propagate(child, tables, constraints):
            depth += 1
            branch_arc[depth] = _first_unassigned(child)
            next_value[depth] = 0

    return found[:n_found]
