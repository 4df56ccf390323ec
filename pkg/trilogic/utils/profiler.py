# Copyright 2023 The Trilogic Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Profiler base class and functionality
"""

from __future__ import annotations

import functools
import time
from typing import Callable, Dict, Optional

from rich.console import Console
from rich.table import Table

from trilogic.configs.base_config import ProfilerConfig
from trilogic.utils.decorators import (
    check_main_thread,
    check_profiler_enabled,
    decorate_all,
)

CONSOLE = Console(width=120)

PROFILER = []


def time_function(func: Callable) -> Callable:
    """Decorator: time a function call"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        ret = func(*args, **kwargs)
        if PROFILER:
            PROFILER[0].update_time(func.__qualname__, start, time.perf_counter())
        return ret

    return wrapper


def flush_profiler(config: ProfilerConfig, console: Optional[Console] = None):
    """Method that checks if profiler is enabled before flushing"""
    if config.enable_profiler and PROFILER:
        PROFILER[0].print_profile(console)


def setup_profiler(config: ProfilerConfig):
    """Initialization of profilers; a second call replaces the first profiler"""
    PROFILER.clear()
    PROFILER.append(Profiler(config))


@decorate_all([check_profiler_enabled, check_main_thread])
class Profiler:
    """Running averages of call durations, keyed by qualified function name"""

    def __init__(self, config: ProfilerConfig):
        self.config = config
        self.profiler_dict: Dict[str, Dict[str, float]] = {}

    def update_time(self, func_name: str, start_time: float, end_time: float):
        """update the profiler dictionary with running averages of durations

        Args:
            func_name: the function name that is being profiled
            start_time: the start time when function is called
            end_time: the end time when function terminated
        """
        val = end_time - start_time
        func_dict = self.profiler_dict.get(func_name, {"val": 0.0, "step": 0})
        prev_val = func_dict["val"]
        prev_step = func_dict["step"]
        self.profiler_dict[func_name] = {"val": (prev_val * prev_step + val) / (prev_step + 1), "step": prev_step + 1}

    def print_profile(self, console: Optional[Console] = None):
        """helper to print out the profiler stats

        Args:
            console: where to print; the stdout console by default
        """
        table = Table(title="Profiling stats, longest average first", title_justify="left")
        table.add_column("function")
        table.add_column("calls", justify="right")
        table.add_column("seconds", justify="right")
        for name, stats in sorted(self.profiler_dict.items(), key=lambda item: item[1]["val"], reverse=True):
            table.add_row(name, str(int(stats["step"])), f"{stats['val']:0.4f}")
        (console or CONSOLE).print(table)
