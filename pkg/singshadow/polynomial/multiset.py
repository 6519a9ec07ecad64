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

"""Multisets of polynomials, written as sums of powers of a formal
variable u.
"""

from collections import Counter
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from singshadow.polynomial.polynomial import MultiPoly, render

__all__ = ["InvariantMultiset", "render_multiset"]


class InvariantMultiset:
    """Polynomials with positive multiplicities.

    The polynomials are exponents of u and are never evaluated; two
    multisets are equal exactly when their renderings are equal.

    Parameters
    ----------
    entries
        Mapping of polynomial to multiplicity, or an iterable of
        polynomials, each counted once.
    """

    def __init__(
        self,
        entries: Union[Mapping[MultiPoly, int], Iterable[MultiPoly], None] = None,
    ):
        self._counter: Counter = Counter()
        if entries is None:
            return
        if isinstance(entries, Mapping):
            for poly, multiplicity in entries.items():
                self.add(poly, multiplicity)
        else:
            for poly in entries:
                self.add(poly)

    def add(self, poly: MultiPoly, multiplicity: int = 1):
        """Add ``poly`` with the given multiplicity."""
        if not isinstance(poly, MultiPoly):
            raise TypeError(f"Expected a MultiPoly, not {type(poly)}")
        if multiplicity < 1:
            raise ValueError(f"Multiplicity must be positive, not {multiplicity}")
        self._counter[poly] += int(multiplicity)

    def update(self, other: "InvariantMultiset"):
        for poly, multiplicity in other.items():
            self.add(poly, multiplicity)

    @property
    def entries(self) -> Dict[MultiPoly, int]:
        """Entries in rendering order."""
        return dict(self.items())

    @property
    def total(self) -> int:
        """Sum of multiplicities."""
        return sum(self._counter.values())

    def items(self) -> Iterator[Tuple[MultiPoly, int]]:
        for poly in sorted(self._counter, key=lambda p: p.sort_key):
            yield poly, self._counter[poly]

    def to_dict(self) -> Dict[str, int]:
        """Rendered polynomial to multiplicity, in rendering order."""
        return {render(poly): mult for poly, mult in self.items()}

    def __len__(self) -> int:
        return len(self._counter)

    def __contains__(self, poly) -> bool:
        return poly in self._counter

    def __getitem__(self, poly: MultiPoly) -> int:
        return self._counter.get(poly, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InvariantMultiset) and self._counter == other._counter
        )

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}('{render_multiset(self)}')"

    def __str__(self) -> str:
        return render_multiset(self)


def render_multiset(m: Optional[InvariantMultiset]) -> str:
    """Render a multiset as ``k*u^{P}`` terms joined by " + ".

    Entries are ordered by their exponent polynomial, leading monomial
    first and smaller coefficient first on ties. A multiplicity of 1
    is left out and the empty multiset is "0".

    Examples
    --------
    >>> from singshadow.polynomial import (
    ...     InvariantMultiset, MultiPoly, render_multiset
    ... )
    >>> m = InvariantMultiset({
    ...     MultiPoly.monomial(t=2): 24,
    ...     MultiPoly.monomial(t=1): 24,
    ...     MultiPoly.monomial(2): 48,
    ... })
    >>> render_multiset(m)
    '24*u^{t^2} + 24*u^{t} + 48*u^{2}'
    """
    if m is None or m.total == 0:
        return "0"
    rendered = []
    for poly, multiplicity in m.items():
        exponent = "{" + render(poly) + "}"
        if multiplicity == 1:
            rendered.append(f"u^{exponent}")
        else:
            rendered.append(f"{multiplicity}*u^{exponent}")
    return " + ".join(rendered)
