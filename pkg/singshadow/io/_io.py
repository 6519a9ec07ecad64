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

import json
import os
from typing import Optional, Union

from singshadow.algebra import FiniteSingquandle
from singshadow.diagram import SingularDiagram
from singshadow.io.plugins import diagram_json, shadow_json, singquandle_json
from singshadow.io._util import _ensure_directory, _get_input_bool
from singshadow.shadow import ShadowStructure


plugins = [shadow_json, diagram_json, singquandle_json]

default_write_ext = set()
for plugin in plugins:
    if plugin.writes:
        default_write_ext.add(plugin.file_extensions[plugin.default_extension])

Loadable = Union[FiniteSingquandle, ShadowStructure, SingularDiagram]


def load(filename: str, **kwargs) -> Loadable:
    """Load a singquandle, shadow or diagram from a supported file
    format.

    Parameters
    ----------
    filename
        Name of file to load.
    kwargs
        Keyword arguments passed to the corresponding reader, like
        ``strict`` for singquandles and shadows. See their individual
        documentation for available options.

    Returns
    -------
    FiniteSingquandle, ShadowStructure or SingularDiagram

    Examples
    --------
    >>> import singshadow as ss
    >>> Q = ss.load(DATA_DIR + "/singquandles/z4_a3b2c3.json")
    >>> Q.size
    4
    """
    if not os.path.isfile(filename):
        raise IOError(f"No filename matches '{filename}'.")

    extension = os.path.splitext(filename)[1][1:]
    readers = []
    for plugin in plugins:
        if extension.lower() in plugin.file_extensions:
            readers.append(plugin)
    if len(readers) == 0:
        raise IOError(
            f"Could not read '{filename}'. If the file format is supported, please "
            "report this error"
        )
    elif len(readers) > 1:
        reader = _plugin_from_footprints(filename, plugins=readers)
    else:
        reader = readers[0]
    if reader is None:
        raise IOError(
            f"Could not read '{filename}', its contents match none of the formats "
            f"{[p.format_name for p in readers]}"
        )

    return reader.file_reader(filename, **kwargs)


def _plugin_from_footprints(filename: str, plugins) -> Optional[object]:
    """Get the correct plugin from a list of potential plugins based on
    their unique footprints.

    The footprint of a plugin is a list of top-level keys of the JSON
    object, any of which identifies the format. The first plugin in
    ``plugins`` whose footprint matches is returned.

    Parameters
    ----------
    filename
        Input file name.
    plugins
        Potential plugins.

    Returns
    -------
    plugin
        One of the potential plugins, or None if no footprint was found.
    """
    try:
        with open(filename, encoding="utf-8") as f:
            d = json.load(f)
    except json.JSONDecodeError as e:
        raise IOError(f"Could not read '{filename}': {e}")
    if not isinstance(d, dict):
        return None

    plugins_with_footprints = [p for p in plugins if hasattr(p, "footprint")]
    for p in plugins_with_footprints:
        if any(key in d for key in p.footprint):
            return p
    return None


def _save(filename: str, obj: Loadable, overwrite: Optional[bool] = None):
    """Write a singquandle, shadow or diagram to a file in a supported
    format.

    Parameters
    ----------
    filename
        File path including name of new file. A missing extension is
        taken to be "json".
    obj
        Object to write.
    overwrite
        Whether to overwrite file or not if it already exists. If None
        (default), the user is asked.
    """
    ext = os.path.splitext(filename)[1][1:]
    if ext == "":
        ext = "json"
        filename = filename + "." + ext

    writer = None
    for plugin in plugins:
        if (
            ext.lower() in plugin.file_extensions
            and plugin.writes
            and isinstance(obj, plugin.object_type)
        ):
            writer = plugin
            break

    if writer is None:
        raise ValueError(
            f"Cannot write {type(obj).__name__} to '{ext}'. Supported file "
            f"extensions are: {sorted(default_write_ext)}"
        )

    _ensure_directory(filename)
    is_file = os.path.isfile(filename)

    # Determine if the object is to be written to file or not
    if overwrite is None:
        write = not is_file or _get_input_bool(f"Overwrite '{filename}' (y/n)?\n")
    elif overwrite is True or (overwrite is False and not is_file):
        write = True
    elif overwrite is False and is_file:
        write = False
    else:
        raise ValueError(
            "overwrite parameter can only be None, True or False, and not "
            f"{overwrite}"
        )

    if write:
        writer.file_writer(filename, obj)
