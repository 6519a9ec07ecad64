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

"""Shadows over Z_n with X = Z_m and an action given by a polynomial
of degree at most two in x and s.
"""

from dataclasses import dataclass
from itertools import product
import logging
from typing import List, Optional, Tuple

import numpy as np

from singshadow._util import compute_in_order, iterate_with_progress
from singshadow.algebra import FiniteSingquandle, linear_residues
from singshadow.shadow.shadow_structure import (
    ShadowStructure,
    _passes,
    _validated,
)

__all__ = [
    "PolynomialActionSpec",
    "build_polynomial_action",
    "polynomial_matrix",
    "search_polynomial_shadows",
]

_logger = logging.getLogger(__name__)

_MONOMIALS = ("", "x", "s", "x^2", "s^2", "x*s")


@dataclass(frozen=True, order=True)
class PolynomialActionSpec:
    """Action x·s = α + βx + γs + δx² + εs² + ζxs modulo m.

    ``coeffs`` is (α, β, γ, δ, ε, ζ), reduced modulo ``modulus``.
    """

    modulus: int
    coeffs: Tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Modulus must be at least 1, not {self.modulus}")
        coeffs = tuple(int(c) % self.modulus for c in self.coeffs)
        if len(coeffs) != 6:
            raise ValueError(f"Expected six coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        alpha, beta, gamma, delta, epsilon, zeta = self.coeffs
        if delta or epsilon or zeta:
            return 2
        if beta or gamma:
            return 1
        return 0

    def __str__(self) -> str:
        terms = []
        for c, monomial in zip(self.coeffs, _MONOMIALS):
            if c == 0:
                continue
            if not monomial:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            else:
                terms.append(f"{c}*{monomial}")
        return " + ".join(terms) if terms else "0"


def _index_of_residue(m: int) -> np.ndarray:
    index_of = np.empty(m, dtype=np.int64)
    index_of[linear_residues(m)] = np.arange(m)
    return index_of


def polynomial_matrix(host: FiniteSingquandle, spec: PolynomialActionSpec) -> np.ndarray:
    """Action matrix of ``spec`` as element indices of X.

    X is Z_m in the order [1, ..., m-1, 0] and the host elements are
    read as integer residues.
    """
    m = spec.modulus
    x = linear_residues(m)[:, None]
    s = host.residues[None, :]
    alpha, beta, gamma, delta, epsilon, zeta = spec.coeffs
    values = (
        alpha + beta * x + gamma * s + delta * x ** 2 + epsilon * s ** 2 + zeta * x * s
    ) % m
    return _index_of_residue(m)[values]


def build_polynomial_action(
    host: FiniteSingquandle,
    spec: PolynomialActionSpec,
    strict: bool = True,
    name: Optional[str] = None,
) -> ShadowStructure:
    """Create the shadow with X = Z_m and the action of ``spec``.

    Validation is as for :func:`~singshadow.shadow.build_shadow`.

    Examples
    --------
    >>> from singshadow.algebra import LinearSingquandleSpec, build_linear
    >>> from singshadow.shadow import PolynomialActionSpec, build_polynomial_action
    >>> host = build_linear(LinearSingquandleSpec(8, 5, 3, 4))
    >>> sh = build_polynomial_action(host, PolynomialActionSpec(4, (0, 1, 2, 0, 1, 0)))
    >>> [sh.label(i) for i in sh.action[0]]
    ['0', '1', '0', '1', '0', '1', '0', '1']
    """
    x_elements = [str(r) for r in linear_residues(spec.modulus)]
    matrix = polynomial_matrix(host, spec)
    if name is None:
        name = f"Z{spec.modulus} over {host.name} with x·s = {spec}"
    return _validated(host, x_elements, matrix, name, strict)


def _passing_specs(
    host: FiniteSingquandle, m: int, alpha: int, beta: int, max_degree: int
) -> List[PolynomialActionSpec]:
    linear_range = range(m) if max_degree >= 1 else range(1)
    square_range = range(m) if max_degree >= 2 else range(1)
    found = []
    for gamma in linear_range:
        for delta, epsilon, zeta in product(square_range, repeat=3):
            spec = PolynomialActionSpec(m, (alpha, beta, gamma, delta, epsilon, zeta))
            if _passes(host, polynomial_matrix(host, spec)):
                found.append(spec)
    return found


def search_polynomial_shadows(
    host: FiniteSingquandle,
    m: int,
    max_degree: int = 2,
    workers: Optional[int] = None,
    progressbar: bool = False,
) -> List[PolynomialActionSpec]:
    """All polynomial actions of degree at most ``max_degree`` on Z_m
    that make a shadow over ``host``.

    Parameters
    ----------
    host
        Singquandle whose elements are integer residues.
    m
        Size of X.
    max_degree
        0, 1 or 2. Default is 2.
    workers
        Number of threads checking values of β in parallel. Default is
        to run synchronously.
    progressbar
        Whether to show a progress bar over the constant term α.
        Default is False.

    Returns
    -------
    specs
        In lexicographic order of the coefficients (α, β, γ, δ, ε, ζ).
    """
    if max_degree not in (0, 1, 2):
        raise ValueError(f"max_degree must be 0, 1 or 2, not {max_degree}")
    if m < 1:
        raise ValueError(f"m must be at least 1, not {m}")
    betas = range(m) if max_degree >= 1 else range(1)
    specs = []
    for alpha in iterate_with_progress(
        range(m), desc="Polynomial shadows", unit="α", enabled=progressbar
    ):
        per_beta = compute_in_order(
            _passing_specs,
            [(host, m, alpha, beta, max_degree) for beta in betas],
            workers,
        )
        for found in per_beta:
            specs.extend(found)
    _logger.info(
        f"Found {len(specs)} polynomial shadows of size {m} over '{host.name}'"
    )
    return specs
