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

"""Linear singquandles over Z_n.

The operations are x∗y = ax + (1-a)y, R₁(x, y) = bx + cy and
R₂(x, y) = acx + (b + c(1-a))y, all modulo n, with a invertible.
"""

from dataclasses import dataclass
from math import gcd
import logging
from typing import List, Optional

import numpy as np

from singshadow._util import compute_in_order, iterate_with_progress
from singshadow.algebra.singquandle import (
    FiniteSingquandle,
    _passes,
    build_from_tables,
)
from singshadow.exceptions import NonInvertibleA

__all__ = [
    "LinearSingquandleSpec",
    "build_linear",
    "enumerate_linear",
    "linear_residues",
]

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LinearSingquandleSpec:
    """Parameters (n, a, b, c) of a linear singquandle. The residues
    are reduced modulo n.
    """

    modulus: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Modulus must be at least 1, not {self.modulus}")
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, getattr(self, name) % self.modulus)

    @property
    def is_invertible(self) -> bool:
        return gcd(self.a, self.modulus) == 1

    @property
    def a_inverse(self) -> int:
        if self.modulus == 1:
            return 0
        if not self.is_invertible:
            raise NonInvertibleA(self.a, self.modulus)
        return pow(self.a, -1, self.modulus)

    @property
    def is_compatible(self) -> bool:
        """Whether (a - 1)(b + c - 1) vanishes modulo n, which is when
        the compatibility equations hold for the linear operations.
        """
        return (self.a - 1) * (self.b + self.c - 1) % self.modulus == 0

    @property
    def name(self) -> str:
        return f"Z{self.modulus} (a={self.a}, b={self.b}, c={self.c})"

    def as_tuple(self):
        return self.a, self.b, self.c


def linear_residues(n: int) -> np.ndarray:
    """Residues of Z_n in the element order [1, 2, ..., n-1, 0]."""
    return np.roll(np.arange(n), -1)


def _linear_tables(spec: LinearSingquandleSpec):
    n, a, b, c = spec.modulus, spec.a, spec.b, spec.c
    residues = linear_residues(n)
    index_of = np.empty(n, dtype=np.int64)
    index_of[residues] = np.arange(n)
    x = residues[:, None]
    y = residues[None, :]
    a_inv = spec.a_inverse
    star = index_of[(a * x + (1 - a) * y) % n]
    bar_star = index_of[(a_inv * x + (1 - a_inv) * y) % n]
    r1 = index_of[(b * x + c * y) % n]
    r2 = index_of[(a * c * x + (b + c * (1 - a)) * y) % n]
    return star, bar_star, r1, r2


def build_linear(
    spec: LinearSingquandleSpec, strict: bool = True, name: Optional[str] = None
) -> FiniteSingquandle:
    """Create the linear singquandle of ``spec``.

    Parameters
    ----------
    spec
        Modulus and coefficients.
    strict
        Passed to :func:`~singshadow.algebra.build_from_tables`. The
        compatibility equations hold only when (a - 1)(b + c - 1) is 0
        modulo n, see :attr:`LinearSingquandleSpec.is_compatible`.
    name
        Name of the structure. Default is ``spec.name``.

    Returns
    -------
    FiniteSingquandle
        Elements are labelled "1", "2", ..., "n-1", "0" in that order.
        The inverse operation is x ∗̄ y = a⁻¹x + (1 - a⁻¹)y.

    Raises
    ------
    NonInvertibleA
        If gcd(a, n) is not 1.

    Examples
    --------
    >>> from singshadow.algebra import LinearSingquandleSpec, build_linear
    >>> Q = build_linear(LinearSingquandleSpec(4, 3, 2, 3))
    >>> Q.elements
    ('1', '2', '3', '0')
    """
    if not spec.is_invertible:
        raise NonInvertibleA(spec.a, spec.modulus)
    star, bar_star, r1, r2 = _linear_tables(spec)
    labels = [str(r) for r in linear_residues(spec.modulus)]
    return build_from_tables(
        name or spec.name,
        labels,
        star=star,
        r1=r1,
        r2=r2,
        bar_star=bar_star,
        strict=strict,
    )


def _passing_c(n: int, a: int, b: int) -> List[LinearSingquandleSpec]:
    found = []
    for c in range(n):
        spec = LinearSingquandleSpec(n, a, b, c)
        if _passes(*_linear_tables(spec)):
            found.append(spec)
    return found


def enumerate_linear(
    n: int, workers: Optional[int] = None, progressbar: bool = False
) -> List[LinearSingquandleSpec]:
    """All linear singquandles of order ``n`` passing every axiom.

    Parameters
    ----------
    n
        Modulus, at least 1.
    workers
        Number of threads checking values of b in parallel. Default is
        to run synchronously.
    progressbar
        Whether to show a progress bar over the values of a. Default
        is False.

    Returns
    -------
    specs
        In lexicographic order of (a, b, c).
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, not {n}")
    candidates = [a for a in range(n) if gcd(a, n) == 1]
    _logger.debug(f"Checking {len(candidates) * n * n} linear structures of order {n}")
    specs = []
    for a in iterate_with_progress(
        candidates, desc="Linear singquandles", unit="a", enabled=progressbar
    ):
        per_b = compute_in_order(_passing_c, [(n, a, b) for b in range(n)], workers)
        for found in per_b:
            specs.extend(found)
    _logger.info(f"Found {len(specs)} linear singquandles of order {n}")
    return specs
