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

from typing import Callable, List, Optional, Sequence

import dask


def compute_in_order(
    func: Callable, arguments: Sequence[tuple], workers: Optional[int] = None
) -> List:
    """Call ``func`` once per argument tuple as delayed dask tasks and
    return the results in argument order.

    Parameters
    ----------
    func
        Function to call. Should release the GIL or be cheap, since the
        threaded scheduler is used.
    arguments
        One tuple of positional arguments per task.
    workers
        Number of threads. If None or 1 (default), the tasks run
        synchronously in the calling thread.

    Returns
    -------
    results
        List of return values, ordered as ``arguments``.
    """
    tasks = [dask.delayed(func)(*args) for args in arguments]
    if not tasks:
        return []
    if workers is None or workers <= 1:
        results = dask.compute(*tasks, scheduler="synchronous")
    else:
        results = dask.compute(*tasks, scheduler="threads", num_workers=workers)
    return list(results)
