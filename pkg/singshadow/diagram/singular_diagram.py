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

"""Singular link diagrams given as lists of 4-valent vertices.

Each vertex names the arcs at its four ends. A classical vertex may
name its over arc once with the key "over", meaning the arc passes
straight over. Such passages split an arc into semi-arcs, which are the
edges of the underlying plane graph.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from singshadow.diagram._backtracking import BAR, EQUAL, R1, R2, STAR
from singshadow.exceptions import DanglingArc, MalformedVertex

__all__ = [
    "CLASSICAL_ROLES",
    "DEFAULT_CCW",
    "IN_ROLES",
    "SINGULAR_ROLES",
    "SemiArc",
    "SingularDiagram",
    "Vertex",
    "VertexKind",
    "diagram_from_dict",
    "parse_diagram",
]

_logger = logging.getLogger(__name__)

CLASSICAL_ROLES = ("under_in", "over_in", "under_out", "over_out")
SINGULAR_ROLES = ("left_in", "right_in", "left_out", "right_out")
IN_ROLES = frozenset(("under_in", "over_in", "left_in", "right_in"))

Slot = Tuple[int, str]


class VertexKind(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    SINGULAR = "singular"

    @property
    def is_classical(self) -> bool:
        return self is not VertexKind.SINGULAR

    @property
    def roles(self) -> Tuple[str, ...]:
        return CLASSICAL_ROLES if self.is_classical else SINGULAR_ROLES


# Counterclockwise order of the ends with both strands pointing
# downwards and the inputs at the top
DEFAULT_CCW = {
    VertexKind.POSITIVE: ("under_in", "over_out", "under_out", "over_in"),
    VertexKind.NEGATIVE: ("over_in", "under_out", "over_out", "under_in"),
    VertexKind.SINGULAR: ("left_in", "left_out", "right_out", "right_in"),
}


@dataclass(frozen=True)
class Vertex:
    """A crossing or singular point.

    ``roles`` maps each of the four ends to its arc label. For a
    classical vertex written with a single "over" label, ``merged_over``
    is True and both over ends carry that label.
    """

    kind: VertexKind
    roles: Dict[str, str] = field(hash=False)
    ccw: Tuple[str, ...]
    merged_over: bool = False
    name: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value}
        if self.name is not None:
            d["name"] = self.name
        for role in self.kind.roles:
            if self.merged_over and role == "over_in":
                d["over"] = self.roles[role]
            elif self.merged_over and role == "over_out":
                continue
            else:
                d[role] = self.roles[role]
        if self.ccw != DEFAULT_CCW[self.kind]:
            d["ccw"] = list(self.ccw)
        return d


@dataclass(frozen=True)
class SemiArc:
    """Part of an arc between two vertex ends.

    ``tail`` is the (vertex, role) end it leaves and ``head`` the end it
    enters.
    """

    label: str
    arc: str
    tail: Slot
    head: Slot


class SingularDiagram:
    """An oriented singular link diagram.

    Create diagrams with :func:`parse_diagram`,
    :func:`diagram_from_dict` or :func:`~singshadow.diagram.builtin`.

    Parameters
    ----------
    name
        Name of the diagram.
    vertices
        Vertices in file order.
    arcs
        Arc labels in coloring order.
    semi_arcs
        Semi-arcs, each vertex end being used by exactly one of them.
    """

    def __init__(
        self,
        name: str,
        vertices: Sequence[Vertex],
        arcs: Sequence[str],
        semi_arcs: Sequence[SemiArc],
    ):
        self.name = name
        self._vertices = tuple(vertices)
        self._arcs = tuple(arcs)
        self._semi_arcs = tuple(semi_arcs)
        self._arc_index = {label: i for i, label in enumerate(self._arcs)}
        self._slots: Dict[Slot, int] = {}
        for i, semi_arc in enumerate(self._semi_arcs):
            for slot in (semi_arc.tail, semi_arc.head):
                if slot in self._slots:
                    raise DanglingArc(
                        semi_arc.arc, f"end {slot[1]} of vertex {slot[0]} is used twice"
                    )
                self._slots[slot] = i
        if len(self._slots) != 4 * len(self._vertices):
            raise ValueError("Every vertex end must belong to exactly one semi-arc")
        self._constraints = self._build_constraints()
        self._constraints.setflags(write=False)

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    @property
    def arcs(self) -> Tuple[str, ...]:
        """Arc labels in the order colorings are reported."""
        return self._arcs

    @property
    def semi_arcs(self) -> Tuple[SemiArc, ...]:
        return self._semi_arcs

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def constraints(self) -> np.ndarray:
        """Coloring relations as rows (operation, out, in1, in2) of arc
        indices, with operation codes from the backtracking kernel.
        """
        return self._constraints

    def arc_index(self, label: str) -> int:
        try:
            return self._arc_index[label]
        except KeyError:
            raise KeyError(f"'{label}' is not an arc of '{self.name}'")

    def semi_arc_at(self, vertex: int, role: str) -> int:
        """Index of the semi-arc using end ``role`` of ``vertex``."""
        return self._slots[(vertex, role)]

    def other_end(self, vertex: int, role: str) -> Slot:
        semi_arc = self._semi_arcs[self._slots[(vertex, role)]]
        if role in IN_ROLES:
            return semi_arc.tail
        return semi_arc.head

    def _build_constraints(self) -> np.ndarray:
        index = self._arc_index
        rows = []
        for vertex in self._vertices:
            r = vertex.roles
            if vertex.kind is VertexKind.SINGULAR:
                left, right = index[r["left_in"]], index[r["right_in"]]
                rows.append((R1, index[r["left_out"]], left, right))
                rows.append((R2, index[r["right_out"]], left, right))
                continue
            op = STAR if vertex.kind is VertexKind.POSITIVE else BAR
            over = index[r["over_in"]]
            rows.append((op, index[r["under_out"]], index[r["under_in"]], over))
            if not vertex.merged_over:
                rows.append((EQUAL, index[r["over_out"]], over, over))
        return np.array(rows, dtype=np.int64).reshape(-1, 4)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "arcs": list(self._arcs),
            "vertices": [v.to_dict() for v in self._vertices],
        }

    def __repr__(self) -> str:
        kinds = [v.kind for v in self._vertices]
        n_singular = kinds.count(VertexKind.SINGULAR)
        return (
            f"{self.__class__.__name__} '{self.name}', "
            f"{len(kinds) - n_singular} classical + {n_singular} singular vertices, "
            f"arcs {self._arcs}"
        )


def _label(index: int, raw: dict, role: str) -> str:
    value = raw.get(role)
    if not isinstance(value, str) or not value:
        raise MalformedVertex(index, f"missing or empty arc label for '{role}'")
    return value


def _parse_vertex(index: int, raw) -> Vertex:
    if not isinstance(raw, dict):
        raise MalformedVertex(index, "expected a JSON object")
    try:
        kind = VertexKind(raw.get("kind"))
    except ValueError:
        raise MalformedVertex(
            index,
            f"unknown kind '{raw.get('kind')}', expected one of "
            f"{[k.value for k in VertexKind]}",
        )

    allowed = set(kind.roles) | {"kind", "ccw", "name"}
    if kind.is_classical:
        allowed.add("over")
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise MalformedVertex(index, f"unexpected keys {unknown} for a {kind.value} vertex")

    roles = {}
    merged = False
    if kind.is_classical:
        if "over" in raw:
            if "over_in" in raw or "over_out" in raw:
                raise MalformedVertex(
                    index, "give either 'over' or both 'over_in' and 'over_out'"
                )
            over_in = over_out = _label(index, raw, "over")
        else:
            over_in = _label(index, raw, "over_in")
            over_out = _label(index, raw, "over_out")
        merged = over_in == over_out
        roles["under_in"] = _label(index, raw, "under_in")
        roles["over_in"] = over_in
        roles["under_out"] = _label(index, raw, "under_out")
        roles["over_out"] = over_out
    else:
        for role in SINGULAR_ROLES:
            roles[role] = _label(index, raw, role)

    ccw = tuple(raw.get("ccw", DEFAULT_CCW[kind]))
    if sorted(ccw) != sorted(kind.roles):
        raise MalformedVertex(
            index, f"'ccw' must be an ordering of {list(kind.roles)}, not {list(ccw)}"
        )

    name = raw.get("name")
    return Vertex(kind, roles, ccw, merged, None if name is None else str(name))


def _arc_order(vertices: Sequence[Vertex], declared) -> List[str]:
    seen = {}
    for vertex in vertices:
        for role in vertex.kind.roles:
            seen.setdefault(vertex.roles[role], None)
    labels = list(seen)
    if declared is None:
        return labels
    if (
        not isinstance(declared, list)
        or len(set(declared)) != len(declared)
        or set(declared) != set(labels)
    ):
        raise MalformedVertex(
            None, f"'arcs' must list each of the arcs {sorted(labels)} once"
        )
    return [str(label) for label in declared]


def _expand(vertices: Sequence[Vertex], arcs: Sequence[str]) -> List[SemiArc]:
    """Split arcs at their passages into semi-arcs, chained from the
    start through the passages in vertex order to the end.
    """
    starts = defaultdict(list)
    ends = defaultdict(list)
    passages = defaultdict(list)
    for v, vertex in enumerate(vertices):
        for role in vertex.kind.roles:
            label = vertex.roles[role]
            if vertex.merged_over and role in ("over_in", "over_out"):
                if role == "over_in":
                    passages[label].append(v)
            elif role in IN_ROLES:
                ends[label].append((v, role))
            else:
                starts[label].append((v, role))

    semi_arcs = []
    for label in arcs:
        s, e, p = starts[label], ends[label], passages[label]
        if len(s) > 1:
            raise DanglingArc(label, f"it leaves {len(s)} vertex ends")
        if len(e) > 1:
            raise DanglingArc(label, f"it enters {len(e)} vertex ends")
        if len(s) != len(e):
            raise DanglingArc(
                label, "it has a start but no end" if s else "it has an end but no start"
            )
        if s:
            tails = s + [(v, "over_out") for v in p]
            heads = [(v, "over_in") for v in p] + e
        else:
            # Closed loop passing over every vertex it meets
            tails = [(v, "over_out") for v in p]
            heads = [(v, "over_in") for v in p[1:] + p[:1]]
        if len(tails) == 1:
            names = [label]
        else:
            names = [f"{label}.{i}" for i in range(len(tails))]
        for name, tail, head in zip(names, tails, heads):
            semi_arcs.append(SemiArc(name, label, tail, head))
    return semi_arcs


def diagram_from_dict(d: dict, name: Optional[str] = None) -> SingularDiagram:
    """Create a diagram from its JSON object.

    Parameters
    ----------
    d
        Object with a "vertices" list and optional "name" and "arcs".
        Each vertex has a "kind" (positive, negative or singular), its
        arc labels per end and an optional "ccw" order of the ends.
    name
        Used when ``d`` has no name.

    Returns
    -------
    SingularDiagram

    Raises
    ------
    MalformedVertex
        If a vertex lacks an end, has an unknown kind or key, or the
        "arcs" list does not match the arcs used.
    DanglingArc
        If the ends of an arc do not chain into one semi-arc path.
    """
    if not isinstance(d, dict):
        raise MalformedVertex(None, "expected a JSON object")
    raw = d.get("vertices")
    if not isinstance(raw, list) or len(raw) == 0:
        raise MalformedVertex(None, "a diagram needs a non-empty 'vertices' list")
    vertices = [_parse_vertex(i, v) for i, v in enumerate(raw)]
    arcs = _arc_order(vertices, d.get("arcs"))
    semi_arcs = _expand(vertices, arcs)
    name = str(d.get("name", name or "diagram"))
    _logger.debug(
        f"Diagram '{name}': {len(vertices)} vertices, {len(arcs)} arcs, "
        f"{len(semi_arcs)} semi-arcs"
    )
    return SingularDiagram(name, vertices, arcs, semi_arcs)


def parse_diagram(text: str, name: Optional[str] = None) -> SingularDiagram:
    """Create a diagram from JSON text, see :func:`diagram_from_dict`.

    Examples
    --------
    >>> from singshadow.diagram import parse_diagram
    >>> D = parse_diagram('''{"name": "1_1^l", "vertices": [
    ...     {"kind": "singular", "left_in": "x", "right_in": "y",
    ...      "left_out": "z", "right_out": "x"},
    ...     {"kind": "positive", "under_in": "z", "over": "x",
    ...      "under_out": "y"}]}''')
    >>> D.arcs
    ('x', 'y', 'z')
    >>> [a.label for a in D.semi_arcs]
    ['x.0', 'x.1', 'y', 'z']
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedVertex(None, f"invalid JSON: {e}")
    return diagram_from_dict(d, name=name)
