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

"""Comparison of two diagrams by all invariants of a shadow."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from singshadow.diagram import SingularDiagram, colorings
from singshadow.invariants.counting import counting, shadow_counting
from singshadow.invariants.polynomials import sp_invariant, ssqp_invariant
from singshadow.polynomial import render_multiset
from singshadow.shadow import ShadowStructure

__all__ = ["DistinguishReport", "InvariantComparison", "distinguish"]

INVARIANTS = ("counting", "shadow_counting", "ssqp", "SP")


@dataclass(frozen=True)
class InvariantComparison:
    """Rendered values of one invariant for two diagrams."""

    name: str
    first: str
    second: str

    @property
    def equal(self) -> bool:
        return self.first == self.second


@dataclass(frozen=True)
class DistinguishReport:
    """Invariants of two diagrams side by side.

    A differing invariant shows that the two singular links are not
    equivalent. Equal invariants show nothing.
    """

    first: str
    second: str
    shadow: str
    comparisons: Tuple[InvariantComparison, ...]

    @property
    def entries(self) -> Dict[str, InvariantComparison]:
        return {c.name: c for c in self.comparisons}

    @property
    def equal(self) -> bool:
        return all(c.equal for c in self.comparisons)

    @property
    def distinguished(self) -> bool:
        return not self.equal

    @property
    def differing(self) -> List[str]:
        return [c.name for c in self.comparisons if not c.equal]

    def lines(self) -> List[str]:
        lines = [f"{self.first} vs {self.second} over {self.shadow}"]
        for c in self.comparisons:
            verdict = "equal" if c.equal else "DIFFERENT"
            lines.append(f"{c.name}: {verdict}")
            lines.append(f"  {self.first}: {c.first}")
            lines.append(f"  {self.second}: {c.second}")
        return lines

    def to_dict(self) -> dict:
        return {
            "first": self.first,
            "second": self.second,
            "shadow": self.shadow,
            "invariants": {
                c.name: {"first": c.first, "second": c.second, "equal": c.equal}
                for c in self.comparisons
            },
            "distinguished": self.distinguished,
        }

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _rendered(D: SingularDiagram, sh: ShadowStructure, om: str, workers) -> List[str]:
    found = colorings(D, sh.host, workers=workers)
    return [
        str(counting(D, sh.host, found=found)),
        str(shadow_counting(D, sh, found=found)),
        render_multiset(ssqp_invariant(D, sh.host, found=found)),
        render_multiset(sp_invariant(D, sh, om=om, workers=workers, found=found)),
    ]


def distinguish(
    D1: SingularDiagram,
    D2: SingularDiagram,
    sh: ShadowStructure,
    om: str = "closure",
    workers: Optional[int] = None,
) -> DistinguishReport:
    """Compare the counting, shadow counting, subsingquandle polynomial
    and shadow polynomial invariants of two diagrams.

    Parameters
    ----------
    D1, D2
        Diagrams to compare.
    sh
        Shadow. Its host gives the singquandle invariants.
    om
        Passed to :func:`~singshadow.invariants.sp_invariant`.
    workers
        Passed to the invariant computations.

    Returns
    -------
    DistinguishReport
    """
    values1 = _rendered(D1, sh, om, workers)
    values2 = _rendered(D2, sh, om, workers)
    comparisons = tuple(
        InvariantComparison(name, a, b)
        for name, a, b in zip(INVARIANTS, values1, values2)
    )
    return DistinguishReport(D1.name, D2.name, sh.name, comparisons)
