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

"""Singquandle shadows: finite sets acted on by a singquandle."""

from dataclasses import dataclass
import logging
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple
import warnings

import numpy as np

from singshadow.algebra import AxiomReport, FiniteSingquandle, closure
from singshadow.algebra.singquandle import _bad_columns, _first_witness
from singshadow.exceptions import (
    AxiomWarning,
    InvalidSubshadow,
    NonBijectiveAction,
    ShadowAxiomViolation,
)
from singshadow.polynomial import Monomial, MultiPoly

__all__ = [
    "SHADOW_AXIOMS",
    "ShadowStructure",
    "Subshadow",
    "build_shadow",
    "canonical_shadow",
    "forward_closure",
    "sp",
    "subsp",
    "verify_shadow_axioms",
]

_logger = logging.getLogger(__name__)

SHADOW_AXIOMS = ("bijective_action", "axiom_i", "axiom_ii")


class ShadowStructure:
    """A finite set X with an action of a host singquandle S.

    Entry ``action[i, j]`` is the index in :attr:`x_elements` of
    xᵢ·sⱼ, where sⱼ is element ``j`` of the host. Rows follow the
    declared X order and columns the host's element order.

    Use :func:`build_shadow`,
    :func:`~singshadow.shadow.build_polynomial_action` or
    :func:`canonical_shadow` to create validated shadows.
    """

    def __init__(
        self,
        host: FiniteSingquandle,
        x_elements: Sequence[str],
        action: np.ndarray,
        name: Optional[str] = None,
        axiom_report: Optional[AxiomReport] = None,
    ):
        self.host = host
        self._x_elements = tuple(str(x) for x in x_elements)
        action = np.array(action, dtype=np.int64)
        shape = (len(self._x_elements), host.size)
        if action.shape != shape:
            raise ValueError(f"Action matrix must have shape {shape}, not {action.shape}")
        action.setflags(write=False)
        self._action = action
        self._index = {label: i for i, label in enumerate(self._x_elements)}
        self.name = name or f"shadow over {host.name}"
        self.axiom_report = axiom_report

    @property
    def x_elements(self) -> Tuple[str, ...]:
        return self._x_elements

    @property
    def size(self) -> int:
        """Number of elements m of X."""
        return len(self._x_elements)

    @property
    def action(self) -> np.ndarray:
        return self._action

    @property
    def inverse_action(self) -> np.ndarray:
        """Matrix of the inverse bijections, ``inverse_action[x·s, s] = x``."""
        inverse = np.empty_like(self._action)
        inverse[self._action, np.arange(self.host.size)[None, :]] = np.arange(
            self.size
        )[:, None]
        return inverse

    @property
    def fixed_counts(self) -> np.ndarray:
        """Number of host elements fixing each element of X."""
        return (self._action == np.arange(self.size)[:, None]).sum(axis=1)

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"'{label}' is not an element of X in '{self.name}'")

    def label(self, index: int) -> str:
        return self._x_elements[index]

    def labels(self, indices: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self._x_elements[i] for i in indices)

    def permuted(self, permutation: Sequence[int]) -> "ShadowStructure":
        """Copy with element ``i`` of X moved to position
        ``permutation[i]``, conjugating the action matrix.
        """
        p = np.asarray(permutation, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.size)):
            raise ValueError(f"{permutation} is not a permutation of X")
        action = np.empty_like(self._action)
        action[p] = p[self._action]
        x_elements = [""] * self.size
        for old, new in enumerate(p):
            x_elements[new] = self._x_elements[old]
        return ShadowStructure(
            self.host,
            x_elements,
            action,
            name=f"{self.name} (permuted)",
            axiom_report=self.axiom_report,
        )

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__} '{self.name}', |X| = {self.size}, "
            f"host '{self.host.name}'"
        )


@dataclass(frozen=True)
class Subshadow:
    """A closed subset S' of the host with a subset Y of X closed under
    the action of S'. Both hold element indices.
    """

    s_subset: FrozenSet[int]
    x_subset: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "s_subset", frozenset(int(i) for i in self.s_subset))
        object.__setattr__(self, "x_subset", frozenset(int(i) for i in self.x_subset))

    @classmethod
    def whole(cls, sh: ShadowStructure) -> "Subshadow":
        return cls(frozenset(range(sh.host.size)), frozenset(range(sh.size)))

    def labels(self, sh: ShadowStructure) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (
            sh.host.labels(sorted(self.s_subset)),
            sh.labels(sorted(self.x_subset)),
        )


def _check_action(
    host: FiniteSingquandle, action: np.ndarray
) -> Dict[str, Optional[Tuple[int, ...]]]:
    """Witness index tuples (x, s1, s2) per shadow axiom."""
    results: Dict[str, Optional[Tuple[int, ...]]] = {}
    columns = _bad_columns(action)
    if columns.size:
        results["bijective_action"] = (int(columns[0]),)
        results["axiom_i"] = None
        results["axiom_ii"] = None
        return results
    results["bijective_action"] = None

    m, n = action.shape
    x, s1, s2 = np.meshgrid(np.arange(m), np.arange(n), np.arange(n), indexing="ij")
    lhs = action[action[x, s1], s2]
    # (x·s1)·s2 = (x·s2)·(s1 ∗ s2)
    results["axiom_i"] = _first_witness(
        lhs == action[action[x, s2], host.star[s1, s2]]
    )
    # (x·s1)·s2 = (x·R1(s1, s2))·R2(s1, s2)
    results["axiom_ii"] = _first_witness(
        lhs == action[action[x, host.r1[s1, s2]], host.r2[s1, s2]]
    )
    return results


def _witness_labels(sh: ShadowStructure, axiom: str, witness: Tuple[int, ...]):
    if axiom == "bijective_action":
        return (sh.host.label(witness[0]),)
    x, s1, s2 = witness
    return (sh.label(x), sh.host.label(s1), sh.host.label(s2))


def verify_shadow_axioms(sh: ShadowStructure) -> AxiomReport:
    """Check that every element of the host acts bijectively and that
    both compatibility axioms of a shadow hold.

    Returns
    -------
    AxiomReport
        Pass/fail per id of :data:`SHADOW_AXIOMS`, with the
        lexicographically smallest failing (x, s1, s2) as labels.
    """
    witnesses = _check_action(sh.host, sh.action)
    return AxiomReport(
        {
            axiom: None if w is None else _witness_labels(sh, axiom, w)
            for axiom, w in witnesses.items()
        }
    )


def _passes(host: FiniteSingquandle, action: np.ndarray) -> bool:
    return all(w is None for w in _check_action(host, action).values())


def _validated(
    host: FiniteSingquandle,
    x_elements: Sequence[str],
    action: np.ndarray,
    name: Optional[str],
    strict: bool,
) -> ShadowStructure:
    action = np.asarray(action, dtype=np.int64)
    columns = _bad_columns(action)
    if columns.size:
        raise NonBijectiveAction(host.label(int(columns[0])))
    sh = ShadowStructure(host, x_elements, action, name=name)
    report = verify_shadow_axioms(sh)
    sh.axiom_report = report
    if not report.passed:
        axiom, witness = report.first_failure
        if strict:
            raise ShadowAxiomViolation(axiom, witness)
        warnings.warn(
            f"'{sh.name}' is not a shadow, failing axioms: "
            f"{', '.join(report.failures)}",
            AxiomWarning,
        )
    return sh


def build_shadow(
    host: FiniteSingquandle,
    x_elements: Sequence,
    matrix: Sequence[Sequence],
    name: Optional[str] = None,
    strict: bool = True,
) -> ShadowStructure:
    """Create a validated shadow from its action matrix.

    Parameters
    ----------
    host
        The acting singquandle.
    x_elements
        Distinct labels of X.
    matrix
        m×n nested sequence where entry (i, j) is the label of
        xᵢ·sⱼ. Labels are compared by their string form.
    name
        Name of the shadow.
    strict
        If True (default), a failing shadow axiom raises
        :class:`~singshadow.exceptions.ShadowAxiomViolation`, otherwise
        an :class:`~singshadow.exceptions.AxiomWarning` is emitted.

    Returns
    -------
    ShadowStructure

    Raises
    ------
    NonBijectiveAction
        If some element of the host does not act bijectively.
    """
    x_elements = [str(x) for x in x_elements]
    if len(set(x_elements)) != len(x_elements):
        raise ValueError(f"Labels of X must be distinct: {x_elements}")
    m, n = len(x_elements), host.size
    rows = [list(row) for row in matrix]
    if len(rows) != m or any(len(row) != n for row in rows):
        raise ValueError(f"Shadow matrix must have shape {(m, n)}")
    index = {label: i for i, label in enumerate(x_elements)}
    try:
        action = np.array([[index[str(v)] for v in row] for row in rows])
    except KeyError as e:
        raise ValueError(f"Shadow matrix entry {e} is not an element of X")
    return _validated(host, x_elements, action, name, strict)


def canonical_shadow(host: FiniteSingquandle, strict: bool = True) -> ShadowStructure:
    """The shadow X = S with x·s = x∗s.

    Its axioms follow from the singquandle axioms of ``host``.
    """
    return _validated(
        host, host.elements, host.star, f"canonical shadow of {host.name}", strict
    )


def forward_closure(
    sh: ShadowStructure, xs: Iterable[int], ss: Iterable[int]
) -> FrozenSet[int]:
    """Smallest superset of ``xs`` closed under the action of ``ss``.

    Since every element acts by a bijection of a finite set, this is
    the union of the orbits of ``xs`` under the group generated by
    ``ss``.
    """
    members = np.zeros(sh.size, dtype=bool)
    members[list(xs)] = True
    columns = np.asarray(sorted(set(ss)), dtype=np.int64)
    if columns.size == 0:
        return frozenset(int(i) for i in np.flatnonzero(members))
    while True:
        reached = sh.action[np.flatnonzero(members)[:, None], columns[None, :]]
        grown = members.copy()
        grown[reached.ravel()] = True
        if np.array_equal(grown, members):
            break
        members = grown
    return frozenset(int(i) for i in np.flatnonzero(members))


def _fixed_polynomial(
    sh: ShadowStructure, s_subset: Iterable[int], x_subset: Iterable[int]
) -> MultiPoly:
    columns = np.asarray(sorted(set(s_subset)), dtype=np.int64)
    terms = []
    for x in sorted(set(x_subset)):
        r = int(np.count_nonzero(sh.action[x, columns] == x)) if columns.size else 0
        terms.append((Monomial(t=r), 1))
    return MultiPoly(terms)


def sp(sh: ShadowStructure) -> MultiPoly:
    """Shadow polynomial, the sum over x in X of t to the number of
    host elements fixing x.
    """
    return _fixed_polynomial(sh, range(sh.host.size), range(sh.size))


def subsp(sh: ShadowStructure, sub: Subshadow) -> MultiPoly:
    """Shadow polynomial of a subshadow, with fixed points counted over
    S' only.

    Raises
    ------
    InvalidSubshadow
        If S' is not closed in the host or Y is not closed under S'.
    """
    if not sub.s_subset:
        raise InvalidSubshadow("The singquandle part of a subshadow is empty")
    if closure(sh.host, sub.s_subset) != sub.s_subset:
        raise InvalidSubshadow(
            f"{sh.host.labels(sorted(sub.s_subset))} is not a subsingquandle"
        )
    if forward_closure(sh, sub.x_subset, sub.s_subset) != sub.x_subset:
        raise InvalidSubshadow(
            f"{sh.labels(sorted(sub.x_subset))} is not closed under the action of "
            f"{sh.host.labels(sorted(sub.s_subset))}"
        )
    return _fixed_polynomial(sh, sub.s_subset, sub.x_subset)
