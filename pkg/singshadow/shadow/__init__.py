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

"""Singquandle shadows (S-sets): construction, axioms, closures,
shadow polynomials, isomorphisms and polynomial-action search.
"""

from singshadow.shadow.shadow_structure import (
    SHADOW_AXIOMS,
    ShadowStructure,
    Subshadow,
    build_shadow,
    canonical_shadow,
    forward_closure,
    sp,
    subsp,
    verify_shadow_axioms,
)
from singshadow.shadow.polynomial_action import (
    PolynomialActionSpec,
    build_polynomial_action,
    polynomial_matrix,
    search_polynomial_shadows,
)
from singshadow.shadow.isomorphism import shadow_isomorphisms


__all__ = [
    "PolynomialActionSpec",
    "SHADOW_AXIOMS",
    "ShadowStructure",
    "Subshadow",
    "build_polynomial_action",
    "build_shadow",
    "canonical_shadow",
    "forward_closure",
    "polynomial_matrix",
    "search_polynomial_shadows",
    "shadow_isomorphisms",
    "sp",
    "subsp",
    "verify_shadow_axioms",
]
