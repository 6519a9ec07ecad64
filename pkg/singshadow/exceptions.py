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

"""Errors and warnings raised by singshadow.

All errors derive from :class:`ValueError`, so code written against
plain ``ValueError`` keeps working.
"""

from typing import Optional, Sequence


__all__ = [
    "AxiomViolation",
    "AxiomWarning",
    "DanglingArc",
    "Disconnected",
    "InconsistentRegionColoring",
    "InvalidSubshadow",
    "MalformedVertex",
    "NonBijectiveAction",
    "NonBijectiveColumn",
    "NonInvertibleA",
    "NonPlanarDiagram",
    "NotClosed",
    "ShadowAxiomViolation",
    "ShadowImageMismatch",
    "SingshadowError",
    "UnknownName",
]


class SingshadowError(ValueError):
    """Base class of all singshadow errors."""


class AxiomWarning(UserWarning):
    """A structure was built although some axiom fails."""


class AxiomViolation(SingshadowError):
    """A singquandle axiom fails.

    Parameters
    ----------
    axiom
        Axiom id, e.g. "eq1" or "idempotency".
    witness
        Element labels of the lexicographically smallest failing tuple.
    """

    def __init__(self, axiom: str, witness: Optional[Sequence] = None):
        self.axiom = axiom
        self.witness = None if witness is None else tuple(witness)
        msg = f"Axiom '{axiom}' fails"
        if witness is not None:
            msg += f" at {self.witness}"
        super().__init__(msg)


class NonBijectiveColumn(AxiomViolation):
    """Right translation by ``column`` is not a bijection."""

    def __init__(self, column):
        self.column = column
        super().__init__("right_invertibility", (column,))
        self.args = (
            f"Right translation by '{column}' is not a bijection, so the "
            "inverse operation cannot be derived",
        )


class NonInvertibleA(SingshadowError):
    def __init__(self, a: int, modulus: int):
        self.a = a
        self.modulus = modulus
        super().__init__(f"a = {a} is not invertible modulo {modulus}")


class NotClosed(SingshadowError):
    """A subset is not closed under the singquandle operations.

    ``witness`` is (operation, x, y, result) in element labels.
    """

    def __init__(self, witness: Sequence):
        self.witness = tuple(witness)
        op, x, y, result = self.witness
        super().__init__(
            f"Subset is not closed: {op}({x}, {y}) = {result} is not in the subset"
        )


class NonBijectiveAction(SingshadowError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"Action of '{column}' is not a bijection of X")


class ShadowAxiomViolation(SingshadowError):
    """A shadow axiom fails, ``witness`` is (x, s1, s2) in labels."""

    def __init__(self, axiom: str, witness: Optional[Sequence] = None):
        self.axiom = axiom
        self.witness = None if witness is None else tuple(witness)
        msg = f"Shadow axiom '{axiom}' fails"
        if witness is not None:
            msg += f" at {self.witness}"
        super().__init__(msg)


class InvalidSubshadow(SingshadowError):
    pass


class MalformedVertex(SingshadowError):
    def __init__(self, index: Optional[int], reason: str):
        self.index = index
        where = "Diagram" if index is None else f"Vertex {index}"
        super().__init__(f"{where}: {reason}")


class DanglingArc(SingshadowError):
    def __init__(self, label: str, reason: str = ""):
        self.label = label
        msg = f"Arc '{label}' does not close up"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class Disconnected(SingshadowError):
    def __init__(self, n_components: int):
        self.n_components = n_components
        super().__init__(
            f"Diagram has {n_components} connected components, regions can only "
            "be traced for connected diagrams"
        )


class NonPlanarDiagram(SingshadowError):
    def __init__(self, n_faces: int, n_vertices: int):
        self.n_faces = n_faces
        self.n_vertices = n_vertices
        super().__init__(
            f"Rotation system gives {n_faces} faces for {n_vertices} vertices, "
            f"expected {n_vertices + 2}; check the 'ccw' orders"
        )


class InconsistentRegionColoring(SingshadowError):
    def __init__(self, face: int, first, second):
        self.face = face
        super().__init__(
            f"Region {face} receives both '{first}' and '{second}'"
        )


class ShadowImageMismatch(SingshadowError):
    pass


class UnknownName(SingshadowError):
    def __init__(self, name: str, known: Sequence[str] = ()):
        self.name = name
        msg = f"Unknown name '{name}'"
        if known:
            msg += f". Known names are: {', '.join(known)}"
        super().__init__(msg)
