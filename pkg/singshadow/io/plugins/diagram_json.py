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

"""Read/write support for singular link diagrams in a JSON format, see
:func:`~singshadow.diagram.diagram_from_dict`.
"""

import json
import os

from singshadow.diagram import SingularDiagram, diagram_from_dict


# Plugin characteristics
# ----------------------
format_name = "diagram_json"
description = "Read/write support for singular link diagrams in JSON."
# Recognised file extension
file_extensions = ["json"]
default_extension = 0
# Writing capabilities
writes = True
object_type = SingularDiagram

# Top-level keys, any of which identifies the format
footprint = ["vertices"]


def file_reader(filename: str, **kwargs) -> SingularDiagram:
    with open(filename, encoding="utf-8") as f:
        d = json.load(f)
    name = os.path.splitext(os.path.basename(filename))[0]
    return diagram_from_dict(d, name=name)


def file_writer(filename: str, D: SingularDiagram):
    with open(filename, mode="w", encoding="utf-8") as f:
        json.dump(D.to_dict(), f, indent=2)
        f.write("\n")
