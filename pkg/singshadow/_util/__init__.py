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

"""Helper functions and classes for managing singshadow.

This module and documentation is only relevant for singshadow
developers, not for users.

.. warning:
    This module and its submodules are for internal use only.  Do not
    use them in your own code. We may change the API at any time with no
    warning.
"""

from singshadow._util._dask import compute_in_order
from singshadow._util._progressbar import iterate_with_progress


__all__ = ["compute_in_order", "iterate_with_progress"]
