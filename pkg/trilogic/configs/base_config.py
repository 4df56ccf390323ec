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

"""Base Configs"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Tuple

from trilogic.utils.scripts import UsageError

THREADS_ENV_VAR = "TRILOGIC_THREADS"


# Pretty printing class
class PrintableConfig:  # pylint: disable=too-few-public-methods
    """Printable Config defining str function"""

    def __str__(self):
        lines = [self.__class__.__name__ + ":"]
        for key, val in vars(self).items():
            if isinstance(val, Tuple):
                flattened_val = "["
                for item in val:
                    flattened_val += str(item) + "\n"
                flattened_val = flattened_val.rstrip("\n")
                val = flattened_val + "]"
            lines += f"{key}: {str(val)}".split("\n")
        return "\n    ".join(lines)


def threads_from_environment() -> int:
    """Worker count hint from ``TRILOGIC_THREADS``. Unset, empty or non-positive values mean one worker."""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from exc
    return max(value, 1)


@dataclass
class WorkerConfig(PrintableConfig):
    """Fan-out of family-wide computations"""

    num_threads: int = field(default_factory=threads_from_environment)
    """number of worker threads; defaults to the TRILOGIC_THREADS environment variable"""
    chunk_size: int = 1024
    """logic ids handed to one worker at a time"""

    def __post_init__(self):
        if self.num_threads < 1:
            raise UsageError(f"num_threads must be positive, got {self.num_threads}")
        if self.chunk_size < 1:
            raise UsageError(f"chunk_size must be positive, got {self.chunk_size}")


@dataclass
class ScanConfig(PrintableConfig):
    """Bounds of the tautology coincidence scan"""

    max_depth: int = 2
    """largest formula depth enumerated; atoms and F have depth 0"""
    num_atoms: int = 1
    """number of atoms, named p and q"""
    implication_free: bool = False
    """restrict the scan to the connectives ~, & and |"""


@dataclass
class ProfilerConfig(PrintableConfig):
    """Timing of decorated functions"""

    enable_profiler: bool = False
    """print running-average durations of profiled functions at the end of a command"""
