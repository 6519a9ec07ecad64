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

"""Finite oriented singquandles given by operation tables."""

from dataclasses import dataclass, field
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import warnings

import numpy as np

from singshadow.exceptions import (
    AxiomViolation,
    AxiomWarning,
    NonBijectiveColumn,
    NotClosed,
)
from singshadow.polynomial import Monomial, MultiPoly

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "ElementProfile",
    "FiniteSingquandle",
    "build_from_tables",
    "closure",
    "profiles",
    "sqp",
    "ssqp",
    "verify_axioms",
]

_logger = logging.getLogger(__name__)

# Checked in this order; the first failure is what strict construction
# reports
AXIOMS = (
    "idempotency",
    "right_invertibility",
    "bar_star_inverse",
    "self_distributivity",
    "eq1",
    "eq2",
    "eq3",
    "eq4",
    "eq5",
)

OPERATIONS = ("star", "bar_star", "r1", "r2")


class FiniteSingquandle:
    """A finite oriented singquandle stored as four operation tables.

    Entry ``star[x, y]`` is the index of x∗y in :attr:`elements`, and
    likewise for the inverse operation ∗̄ and the singular operations
    R₁ and R₂. The tables are read-only.

    Use :func:`build_from_tables` or
    :func:`~singshadow.algebra.build_linear` to create validated
    structures; this constructor checks only table shapes.

    Parameters
    ----------
    name
        Name of the structure.
    elements
        Distinct element labels, in the declared element order.
    star, bar_star, r1, r2
        Operation tables of shape (n, n) with element indices.
    axiom_report
        Result of the axiom check made at construction, if any.
    """

    def __init__(
        self,
        name: str,
        elements: Sequence[str],
        star: np.ndarray,
        bar_star: np.ndarray,
        r1: np.ndarray,
        r2: np.ndarray,
        axiom_report: Optional["AxiomReport"] = None,
    ):
        self.name = str(name)
        self._elements = tuple(str(e) for e in elements)
        n = len(self._elements)
        tables = []
        for what, table in zip(OPERATIONS, (star, bar_star, r1, r2)):
            table = np.array(table, dtype=np.int64)
            if table.shape != (n, n):
                raise ValueError(
                    f"Table '{what}' must have shape {(n, n)}, not {table.shape}"
                )
            table.setflags(write=False)
            tables.append(table)
        self._tables = np.stack(tables)
        self._tables.setflags(write=False)
        self._index = {label: i for i, label in enumerate(self._elements)}
        self.axiom_report = axiom_report

    @property
    def elements(self) -> Tuple[str, ...]:
        return self._elements

    @property
    def size(self) -> int:
        """Number of elements n."""
        return len(self._elements)

    @property
    def star(self) -> np.ndarray:
        return self._tables[0]

    @property
    def bar_star(self) -> np.ndarray:
        return self._tables[1]

    @property
    def r1(self) -> np.ndarray:
        return self._tables[2]

    @property
    def r2(self) -> np.ndarray:
        return self._tables[3]

    @property
    def tables(self) -> np.ndarray:
        """All tables stacked as (star, bar_star, r1, r2) into an array
        of shape (4, n, n).
        """
        return self._tables

    @property
    def residues(self) -> np.ndarray:
        """Element labels as integers, for structures over Z_n."""
        try:
            return np.array([int(e) for e in self._elements], dtype=np.int64)
        except ValueError:
            raise ValueError(
                f"Elements of '{self.name}' are not integer residues: "
                f"{self._elements}"
            )

    def index(self, label) -> int:
        """Index of an element label. Integers are matched by their
        string form.
        """
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"'{label}' is not an element of '{self.name}'")

    def label(self, index: int) -> str:
        return self._elements[index]

    def labels(self, indices: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self._elements[i] for i in indices)

    def permuted(self, permutation: Sequence[int]) -> "FiniteSingquandle":
        """Isomorphic copy where element ``i`` moves to position
        ``permutation[i]``.

        The permutation itself is then an isomorphism from this
        structure to the copy.
        """
        p = np.asarray(permutation, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.size)):
            raise ValueError(f"{permutation} is not a permutation of the elements")
        new_tables = np.empty_like(self._tables)
        new_tables[:, p[:, None], p[None, :]] = p[self._tables]
        new_elements = [""] * self.size
        for old, new in enumerate(p):
            new_elements[new] = self._elements[old]
        return FiniteSingquandle(
            f"{self.name} (permuted)",
            new_elements,
            *new_tables,
            axiom_report=self.axiom_report,
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__} '{self.name}' of {self.size} elements"


@dataclass(frozen=True)
class ElementProfile:
    """Fixed-point counts of one element.

    ``r1c`` counts the y with x∗y = x and ``c1c`` the y with y∗x = y;
    the pairs ``r2c``, ``c2c`` and ``r3c``, ``c3c`` do the same for R₁
    and R₂.
    """

    r1c: int
    c1c: int
    r2c: int
    c2c: int
    r3c: int
    c3c: int

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.r1c, self.c1c, self.r2c, self.c2c, self.r3c, self.c3c)

    @property
    def monomial(self) -> Monomial:
        return Monomial(
            s1=self.r1c,
            t1=self.c1c,
            s2=self.r2c,
            t2=self.c2c,
            s3=self.r3c,
            t3=self.c3c,
        )


@dataclass(frozen=True)
class AxiomReport:
    """Pass or fail per axiom.

    ``results`` maps each axiom id of :data:`AXIOMS` to None when it
    holds, or to the lexicographically smallest failing tuple of
    element labels.
    """

    results: Dict[str, Optional[Tuple[str, ...]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(w is None for w in self.results.values())

    @property
    def failures(self) -> Dict[str, Tuple[str, ...]]:
        return {k: w for k, w in self.results.items() if w is not None}

    @property
    def first_failure(self) -> Optional[Tuple[str, Tuple[str, ...]]]:
        for axiom, witness in self.results.items():
            if witness is not None:
                return axiom, witness
        return None

    def __getitem__(self, axiom: str) -> Optional[Tuple[str, ...]]:
        return self.results[axiom]

    def lines(self) -> List[str]:
        out = []
        for axiom, witness in self.results.items():
            if witness is None:
                out.append(f"{axiom}: pass")
            else:
                out.append(f"{axiom}: FAIL at ({', '.join(witness)})")
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "axioms": {
                k: None if w is None else list(w) for k, w in self.results.items()
            },
        }

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _first_witness(ok: np.ndarray) -> Optional[Tuple[int, ...]]:
    bad = np.argwhere(~ok)
    if bad.size == 0:
        return None
    return tuple(int(i) for i in bad[0])


def _bad_columns(table: np.ndarray) -> np.ndarray:
    """Indices of columns that are not permutations of the rows."""
    n = table.shape[0]
    expected = np.arange(n)[:, None]
    return np.flatnonzero(np.any(np.sort(table, axis=0) != expected, axis=0))


def _invert_columns(star: np.ndarray) -> np.ndarray:
    """Solve z∗y = x for z, column by column."""
    n = star.shape[0]
    bar_star = np.empty_like(star)
    bar_star[star, np.arange(n)[None, :]] = np.arange(n)[:, None]
    return bar_star


def _check_tables(
    star: np.ndarray, bar: np.ndarray, r1: np.ndarray, r2: np.ndarray
) -> Dict[str, Optional[Tuple[int, ...]]]:
    """Witness index tuples per axiom, None where the axiom holds."""
    n = star.shape[0]
    i = np.arange(n)
    x, y = np.meshgrid(i, i, indexing="ij")
    a, b, c = np.meshgrid(i, i, i, indexing="ij")

    results: Dict[str, Optional[Tuple[int, ...]]] = {}
    results["idempotency"] = _first_witness(star[i, i] == i)
    columns = _bad_columns(star)
    results["right_invertibility"] = (
        (int(columns[0]),) if columns.size else None
    )
    if columns.size:
        # The remaining checks need a well-defined inverse operation
        for axiom in AXIOMS[2:]:
            results[axiom] = None
        return results

    results["bar_star_inverse"] = _first_witness(
        (star[bar, y] == x) & (bar[star, y] == x)
    )
    results["self_distributivity"] = _first_witness(
        star[star[a, b], c] == star[star[a, c], star[b, c]]
    )
    # R1(a ∗̄ b, c) ∗ b = R1(a, c ∗ b)
    results["eq1"] = _first_witness(star[r1[bar[a, b], c], b] == r1[a, star[c, b]])
    # R2(a ∗̄ b, c) = R2(a, c ∗ b) ∗̄ b
    results["eq2"] = _first_witness(r2[bar[a, b], c] == bar[r2[a, star[c, b]], b])
    # (b ∗̄ R1(a, c)) ∗ a = (b ∗ R2(a, c)) ∗̄ c
    results["eq3"] = _first_witness(
        star[bar[b, r1[a, c]], a] == bar[star[b, r2[a, c]], c]
    )
    # R2(a, b) = R1(b, a ∗ b)
    results["eq4"] = _first_witness(r2[x, y] == r1[y, star[x, y]])
    # R1(a, b) ∗ R2(a, b) = R2(b, a ∗ b)
    results["eq5"] = _first_witness(star[r1[x, y], r2[x, y]] == r2[y, star[x, y]])
    return results


def _passes(star, bar, r1, r2) -> bool:
    return all(w is None for w in _check_tables(star, bar, r1, r2).values())


def _as_table(table, n: int, what: str) -> np.ndarray:
    table = np.asarray(table)
    if table.shape != (n, n):
        raise ValueError(f"Table '{what}' must have shape {(n, n)}, not {table.shape}")
    table = table.astype(np.int64)
    if table.size and (table.min() < 0 or table.max() >= n):
        raise ValueError(f"Table '{what}' has entries outside [0, {n})")
    return table


def verify_axioms(Q: FiniteSingquandle) -> AxiomReport:
    """Check the quandle axioms and the five compatibility equations of
    an oriented singquandle.

    Parameters
    ----------
    Q
        Structure to check.

    Returns
    -------
    AxiomReport
        Pass/fail per axiom id of :data:`AXIOMS`. A failure carries the
        lexicographically smallest failing tuple (x,), (x, y) or
        (a, b, c) under the element order, as labels.

    Examples
    --------
    >>> from singshadow.algebra import (
    ...     LinearSingquandleSpec, build_linear, verify_axioms
    ... )
    >>> Q = build_linear(LinearSingquandleSpec(10, 3, 4, 6), strict=False)
    >>> verify_axioms(Q)["eq1"]
    ('1', '1', '1')
    """
    witnesses = _check_tables(Q.star, Q.bar_star, Q.r1, Q.r2)
    return AxiomReport(
        {
            axiom: None if w is None else Q.labels(w)
            for axiom, w in witnesses.items()
        }
    )


def build_from_tables(
    name: str,
    elements: Sequence,
    star,
    r1,
    r2,
    bar_star=None,
    strict: bool = True,
) -> FiniteSingquandle:
    """Create a validated singquandle from operation tables.

    Parameters
    ----------
    name
        Name of the structure.
    elements
        Distinct element labels in the declared order.
    star, r1, r2
        Tables of shape (n, n) with element indices (positions in
        ``elements``).
    bar_star
        Optional table of the inverse operation. It is always derived
        from ``star`` by inverting each column; a supplied table must
        equal the derived one.
    strict
        If True (default), any failing axiom raises
        :class:`~singshadow.exceptions.AxiomViolation`. If False, the
        structure is returned with an
        :class:`~singshadow.exceptions.AxiomWarning` and the report in
        :attr:`FiniteSingquandle.axiom_report`. Columns of ``star`` must
        be bijections in both modes.

    Returns
    -------
    FiniteSingquandle

    Raises
    ------
    NonBijectiveColumn
        If a right translation is not a bijection.
    AxiomViolation
        If ``bar_star`` is inconsistent with ``star``, or an axiom
        fails and ``strict`` is True.
    """
    elements = [str(e) for e in elements]
    if len(set(elements)) != len(elements):
        raise ValueError(f"Element labels must be distinct: {elements}")
    n = len(elements)
    if n == 0:
        raise ValueError("A singquandle needs at least one element")
    star = _as_table(star, n, "star")
    r1 = _as_table(r1, n, "r1")
    r2 = _as_table(r2, n, "r2")

    columns = _bad_columns(star)
    if columns.size:
        raise NonBijectiveColumn(elements[columns[0]])
    derived = _invert_columns(star)
    if bar_star is not None:
        bar_star = _as_table(bar_star, n, "bar_star")
        mismatch = _first_witness(bar_star == derived)
        if mismatch is not None:
            raise AxiomViolation(
                "bar_star_inverse", tuple(elements[i] for i in mismatch)
            )

    Q = FiniteSingquandle(name, elements, star, derived, r1, r2)
    report = verify_axioms(Q)
    Q.axiom_report = report
    if not report.passed:
        axiom, witness = report.first_failure
        if strict:
            raise AxiomViolation(axiom, witness)
        failing = ", ".join(report.failures)
        warnings.warn(
            f"'{name}' is not an oriented singquandle, failing axioms: {failing}",
            AxiomWarning,
        )
    _logger.debug(f"Built '{name}' with {n} elements")
    return Q


def closure(Q: FiniteSingquandle, seed: Iterable[int]) -> FrozenSet[int]:
    """Smallest subset containing ``seed`` that is closed under all
    four operations.

    Parameters
    ----------
    Q
        Ambient structure.
    seed
        Element indices.

    Returns
    -------
    frozenset of int
    """
    members = np.zeros(Q.size, dtype=bool)
    members[list(seed)] = True
    while True:
        idx = np.flatnonzero(members)
        products = Q.tables[:, idx[:, None], idx[None, :]]
        grown = members.copy()
        grown[products.ravel()] = True
        if np.array_equal(grown, members):
            break
        members = grown
    return frozenset(int(i) for i in np.flatnonzero(members))


def profiles(Q: FiniteSingquandle) -> List[ElementProfile]:
    """Fixed-point counts of every element, in element order.

    Counts range over the whole structure. For each of ∗, R₁ and R₂,
    the "r" count of x is the number of y with op(x, y) = x and the "c"
    count is the number of y with op(y, x) = y.
    """
    rows = np.arange(Q.size)[:, None]
    counts = []
    for table in (Q.star, Q.r1, Q.r2):
        fixed = table == rows
        counts.append(fixed.sum(axis=1))
        counts.append(fixed.sum(axis=0))
    counts = np.stack(counts, axis=1)
    return [ElementProfile(*(int(c) for c in row)) for row in counts]


def _escape(Q: FiniteSingquandle, subset: Sequence[int]) -> Optional[tuple]:
    """First (operation, x, y, result) leaving ``subset``, if any."""
    idx = np.asarray(sorted(subset), dtype=np.int64)
    for op, table in zip(OPERATIONS, Q.tables):
        sub = table[idx[:, None], idx[None, :]]
        witness = _first_witness(np.isin(sub, idx))
        if witness is not None:
            i, j = witness
            return (op, Q.label(idx[i]), Q.label(idx[j]), Q.label(sub[i, j]))
    return None


def ssqp(Q: FiniteSingquandle, subset: Iterable[int]) -> MultiPoly:
    """Subsingquandle polynomial of a closed subset.

    The profile of each element is counted over the whole structure,
    only the sum is restricted to ``subset``.

    Raises
    ------
    NotClosed
        If ``subset`` is not closed under the operations.
    """
    subset = sorted(set(subset))
    witness = _escape(Q, subset)
    if witness is not None:
        raise NotClosed(witness)
    element_profiles = profiles(Q)
    return MultiPoly([(element_profiles[x].monomial, 1) for x in subset])


def sqp(Q: FiniteSingquandle) -> MultiPoly:
    """Singquandle polynomial, the sum of the profile monomials of all
    elements.
    """
    return ssqp(Q, range(Q.size))
