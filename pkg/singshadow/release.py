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

from datetime import datetime


author = "singshadow developers"
copyright = f"Copyright 2021-{datetime.now().year}, singshadow"
credits = []
license = "GPLv3+"
maintainer = "singshadow developers"
maintainer_email = ""
name = "singshadow"
platforms = ["Linux", "MacOS X", "Windows"]
status = "Development"
version = "0.1.dev0"
