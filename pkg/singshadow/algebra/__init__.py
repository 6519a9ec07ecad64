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

"""Finite oriented singquandles: construction, axioms, closures,
profiles, polynomials and isomorphisms.
"""

from singshadow.algebra.singquandle import (
    AXIOMS,
    AxiomReport,
    ElementProfile,
    FiniteSingquandle,
    build_from_tables,
    closure,
    profiles,
    sqp,
    ssqp,
    verify_axioms,
)
from singshadow.algebra.linear import (
    LinearSingquandleSpec,
    build_linear,
    enumerate_linear,
    linear_residues,
)
from singshadow.algebra.isomorphism import isomorphisms


__all__ = [
    "AXIOMS",
    "AxiomReport",
    "ElementProfile",
    "FiniteSingquandle",
    "LinearSingquandleSpec",
    "build_from_tables",
    "build_linear",
    "closure",
    "enumerate_linear",
    "isomorphisms",
    "linear_residues",
    "profiles",
    "sqp",
    "ssqp",
    "verify_axioms",
]
