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

"""Command line interface, ``singshadow <command> ...``.

Exit codes are 0 on success, 1 when a check fails, a computation fails
or two diagrams are distinguished, and 2 on usage or parse errors.
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional
import warnings

from singshadow import data
from singshadow.algebra import (
    FiniteSingquandle,
    enumerate_linear,
    verify_axioms,
)
from singshadow.diagram import (
    SingularDiagram,
    colorings,
    region_coloring,
    trace_regions,
)
from singshadow.exceptions import (
    AxiomWarning,
    DanglingArc,
    MalformedVertex,
    SingshadowError,
    UnknownName,
)
from singshadow.invariants import (
    OM_MODES,
    counting,
    distinguish,
    shadow_counting,
    sp_invariant,
    ssqp_invariant,
)
from singshadow.io import load
from singshadow.polynomial import render, render_multiset
from singshadow.shadow import (
    ShadowStructure,
    search_polynomial_shadows,
    sp,
    verify_shadow_axioms,
)

__all__ = ["main", "run"]

_logger = logging.getLogger(__name__)

INVARIANTS = ("count", "ssqp", "sp-struct", "shadow-count", "SP")
BUILTIN_KINDS = ("diagrams", "structures", "shadows")
OM_HELP = (
    "X part of each shadow coloring. 'closure' (default) closes the region "
    "colors under the image of the coloring, 'regions' takes the region colors "
    "as they are. They can differ, e.g. SP of K2 over shadow_z12_z8 ends in "
    "8*u^{4} with 'closure' and 8*u^{3} with 'regions'."
)

# Errors in the input rather than in the mathematics
_PARSE_ERRORS = (
    MalformedVertex,
    DanglingArc,
    UnknownName,
    OSError,
    json.JSONDecodeError,
)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singshadow",
        description="Singquandle colorings, shadows and invariants of singular links.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Number of threads for searches. Output does not depend on it.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log INFO (-v) or DEBUG (-vv) messages to standard error.",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    verify = commands.add_parser("verify", help="Check the axioms of a structure.")
    verify.add_argument("kind", choices=["singquandle", "shadow"])
    verify.add_argument("source", help="File or packaged name.")
    verify.add_argument("--json", action="store_true")

    col = commands.add_parser("colorings", help="Count or list the colorings.")
    col.add_argument("diagram", help="Diagram file or packaged name.")
    col.add_argument("--structure", required=True)
    col.add_argument("--list", action="store_true", help="Print every coloring.")
    col.add_argument("--lenient", action="store_true")
    col.add_argument("--json", action="store_true")

    inv = commands.add_parser("invariant", help="Compute an invariant.")
    inv.add_argument("name", choices=INVARIANTS)
    inv.add_argument("diagram", nargs="?", help="Diagram file or packaged name.")
    inv.add_argument("--structure")
    inv.add_argument("--shadow")
    inv.add_argument("--om", choices=OM_MODES, default="closure", help=OM_HELP)
    inv.add_argument("--lenient", action="store_true")
    inv.add_argument("--json", action="store_true")

    reg = commands.add_parser("regions", help="Trace the faces of a diagram.")
    reg.add_argument("diagram")
    reg.add_argument("--shadow", help="Also color the faces with this shadow.")
    reg.add_argument("--coloring", type=int, default=0, help="Index of the coloring.")
    reg.add_argument("--x0", help="Color of face 0. Default is the first element.")
    reg.add_argument("--json", action="store_true")

    dis = commands.add_parser("distinguish", help="Compare two diagrams.")
    dis.add_argument("first")
    dis.add_argument("second")
    dis.add_argument("--shadow", required=True)
    dis.add_argument("--om", choices=OM_MODES, default="closure", help=OM_HELP)
    dis.add_argument("--json", action="store_true")

    search = commands.add_parser("search", help="Search for structures.")
    search.add_argument("what", choices=["linear", "shadows"])
    search.add_argument("--modulus", type=int)
    search.add_argument("--structure")
    search.add_argument("--size", type=int)
    search.add_argument("--max-degree", type=int, choices=[0, 1, 2], default=2)
    search.add_argument("--progress", action="store_true")
    search.add_argument("--json", action="store_true")

    builtin = commands.add_parser("builtin", help="List packaged objects.")
    builtin.add_argument("action", choices=["list"])
    builtin.add_argument("kind", nargs="?", choices=BUILTIN_KINDS)

    return parser


def _configure_logging(verbosity: int):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def _is_file(source: str) -> bool:
    return os.path.isfile(source)


def _diagram(source: str) -> SingularDiagram:
    if _is_file(source):
        D = load(source)
        if not isinstance(D, SingularDiagram):
            raise _UsageError(f"'{source}' is not a diagram")
        return D
    return data.diagram(source)


def _structure(source: str, strict: bool = True) -> FiniteSingquandle:
    kwargs = {} if strict else {"strict": False}
    if _is_file(source):
        Q = load(source, **kwargs)
        if not isinstance(Q, FiniteSingquandle):
            raise _UsageError(f"'{source}' is not a singquandle")
        return Q
    return data.singquandle(source, **kwargs)


def _shadow(source: str, strict: bool = True) -> ShadowStructure:
    kwargs = {} if strict else {"strict": False}
    if _is_file(source):
        sh = load(source, **kwargs)
        if not isinstance(sh, ShadowStructure):
            raise _UsageError(f"'{source}' is not a shadow")
        return sh
    return data.shadow(source, **kwargs)


def _emit(args, payload: dict, lines: List[str]):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _verify(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AxiomWarning)
        if args.kind == "singquandle":
            obj = _structure(args.source, strict=False)
            report = verify_axioms(obj)
        else:
            obj = _shadow(args.source, strict=False)
            report = verify_shadow_axioms(obj)
    payload = {"name": obj.name, "passed": report.passed, "axioms": report.to_dict()}
    _emit(args, payload, [obj.name] + report.lines())
    return 0 if report.passed else 1


def _colorings(args) -> int:
    D = _diagram(args.diagram)
    Q = _structure(args.structure, strict=not args.lenient)
    found = colorings(D, Q, workers=args.workers)
    rows = [list(f.labels(Q)) for f in found]
    lines = [str(len(found))]
    if args.list:
        lines += ["(" + ", ".join(row) + ")" for row in rows]
    payload = {
        "diagram": D.name,
        "structure": Q.name,
        "arcs": list(D.arcs),
        "count": len(found),
    }
    if args.list:
        payload["colorings"] = rows
    _emit(args, payload, lines)
    return 0


def _invariant(args) -> int:
    strict = not args.lenient
    name = args.name
    payload = {"invariant": name}
    if name == "sp-struct":
        if args.shadow is None:
            raise _UsageError("'invariant sp-struct' needs --shadow")
        sh = _shadow(args.shadow, strict=strict)
        value = render(sp(sh))
        payload.update(shadow=sh.name, value=value)
        _emit(args, payload, [value])
        return 0

    if args.diagram is None:
        raise _UsageError(f"'invariant {name}' needs a diagram")
    D = _diagram(args.diagram)
    payload["diagram"] = D.name
    if name in ("count", "ssqp"):
        if args.structure is not None:
            Q = _structure(args.structure, strict=strict)
        elif args.shadow is not None:
            Q = _shadow(args.shadow, strict=strict).host
        else:
            raise _UsageError(f"'invariant {name}' needs --structure")
        payload["structure"] = Q.name
        if name == "count":
            value = str(counting(D, Q, workers=args.workers))
        else:
            multiset = ssqp_invariant(D, Q, workers=args.workers)
            value = render_multiset(multiset)
            payload["terms"] = multiset.to_dict()
    else:
        if args.shadow is None:
            raise _UsageError(f"'invariant {name}' needs --shadow")
        sh = _shadow(args.shadow, strict=strict)
        payload["shadow"] = sh.name
        if name == "shadow-count":
            value = str(shadow_counting(D, sh, workers=args.workers))
        else:
            multiset = sp_invariant(D, sh, om=args.om, workers=args.workers)
            value = render_multiset(multiset)
            payload.update(om=args.om, terms=multiset.to_dict())
    payload["value"] = value
    _emit(args, payload, [value])
    return 0


def _corner_name(D: SingularDiagram, corner) -> str:
    v, i = corner
    vertex = D.vertices[v]
    return f"{vertex.name or v}:{i}"


def _regions(args) -> int:
    D = _diagram(args.diagram)
    region_map = trace_regions(D)
    lines = [f"faces: {region_map.n_faces}"]
    faces = []
    for face in region_map.faces:
        corners = [_corner_name(D, c) for c in region_map.boundaries[face]]
        faces.append({"face": face, "corners": corners})
        lines.append(f"face {face}: {' '.join(corners)}")
    sides = {}
    for label, (left, right) in region_map.sides.items():
        sides[label] = {"left": left, "right": right}
        lines.append(f"{label}: left {left}, right {right}")
    payload = {"diagram": D.name, "faces": faces, "sides": sides}

    if args.shadow is not None:
        sh = _shadow(args.shadow)
        found = colorings(D, sh.host, workers=args.workers)
        if not 0 <= args.coloring < len(found):
            raise _UsageError(
                f"--coloring must be in [0, {len(found)}), not {args.coloring}"
            )
        x0 = 0 if args.x0 is None else sh.index(args.x0)
        f = found[args.coloring]
        colors = region_coloring(D, sh, f, x0=x0, region_map=region_map)
        labels = {face: sh.label(x) for face, x in colors.items()}
        payload.update(
            shadow=sh.name,
            coloring=dict(zip(f.arcs, f.labels(sh.host))),
            region_colors={str(k): v for k, v in labels.items()},
        )
        pairs = zip(f.arcs, f.labels(sh.host))
        lines.append("coloring: " + " ".join(f"{a}={c}" for a, c in pairs))
        lines += [f"face {face}: {label}" for face, label in labels.items()]
    _emit(args, payload, lines)
    return 0


def _distinguish(args) -> int:
    D1 = _diagram(args.first)
    D2 = _diagram(args.second)
    sh = _shadow(args.shadow)
    report = distinguish(D1, D2, sh, om=args.om, workers=args.workers)
    _emit(args, report.to_dict(), report.lines())
    return 1 if report.distinguished else 0


def _search(args) -> int:
    if args.what == "linear":
        if args.modulus is None:
            raise _UsageError("'search linear' needs --modulus")
        specs = enumerate_linear(
            args.modulus, workers=args.workers, progressbar=args.progress
        )
        payload = {
            "modulus": args.modulus,
            "structures": [dict(zip("abc", s.as_tuple())) for s in specs],
        }
        _emit(args, payload, [s.name for s in specs])
        return 0

    if args.structure is None or args.size is None:
        raise _UsageError("'search shadows' needs --structure and --size")
    host = _structure(args.structure)
    specs = search_polynomial_shadows(
        host,
        args.size,
        max_degree=args.max_degree,
        workers=args.workers,
        progressbar=args.progress,
    )
    payload = {
        "structure": host.name,
        "size": args.size,
        "actions": [list(s.coeffs) for s in specs],
    }
    _emit(args, payload, [f"x·s = {s}" for s in specs])
    return 0


def _builtin(args) -> int:
    kinds = [args.kind] if args.kind else list(BUILTIN_KINDS)
    for kind in kinds:
        if len(kinds) > 1:
            print(f"{kind}:")
        for name in data.builtin_names(kind):
            print(f"  {name}" if len(kinds) > 1 else name)
    return 0


_COMMANDS = {
    "verify": _verify,
    "colorings": _colorings,
    "invariant": _invariant,
    "regions": _regions,
    "distinguish": _distinguish,
    "search": _search,
    "builtin": _builtin,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Run a command and return its exit code.

    Parameters
    ----------
    argv
        Arguments without the program name. Default is ``sys.argv[1:]``.

    Returns
    -------
    int
        0 on success, 1 on a failed check, failed computation or a
        distinguished pair, 2 on a usage or parse error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code is None else int(e.code)
    _configure_logging(args.verbose)
    if args.workers is not None and args.workers < 1:
        parser.print_usage(sys.stderr)
        print("singshadow: error: --workers must be at least 1", file=sys.stderr)
        return 2

    try:
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"singshadow: error: {e}", file=sys.stderr)
        return 2
    except _PARSE_ERRORS as e:
        print(f"singshadow: error: {e}", file=sys.stderr)
        return 2
    except SingshadowError as e:
        _logger.debug("Computation failed", exc_info=True)
        print(f"singshadow: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except (KeyError, ValueError) as e:
        # Malformed tables or labels in otherwise valid JSON
        print(f"singshadow: error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
