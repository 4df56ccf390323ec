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

"""Additional rich ui components"""

from __future__ import annotations

from contextlib import nullcontext
from typing import Optional

from rich.console import Console
from rich.progress import (
    BarColumn,
    Progress,
    ProgressColumn,
    Task,
    TaskProgressColumn,
    TextColumn,
    TimeRemainingColumn,
)
from rich.text import Text

CONSOLE = Console(width=120)


class ItemsPerSecColumn(ProgressColumn):
    """Renders the processed items per second for a progress bar."""

    def __init__(self, suffix: str = "logics/s") -> None:
        super().__init__()
        self.suffix = suffix

    def render(self, task: Task) -> Text:
        """Show throughput."""
        speed = task.finished_speed or task.speed
        if speed is None:
            return Text("?", style="progress.data.speed")
        return Text(f"{speed:.0f} {self.suffix}", style="progress.data.speed")


def status(msg: str, spinner: str = "bouncingBall", quiet: bool = False, console: Optional[Console] = None):
    """A context manager showing a spinner under a message while a family-wide job runs.

    Args:
        msg: The message to show.
        spinner: The spinner to use.
        quiet: If True, show nothing.
        console: Console to draw on; defaults to the stdout console.
    """
    if quiet:
        return nullcontext()
    return (console or CONSOLE).status(msg, spinner=spinner)


def get_progress(description: str, suffix: Optional[str] = None, console: Optional[Console] = None) -> Progress:
    """Helper function to return a rich Progress object."""
    progress_list = [TextColumn(description), BarColumn(), TaskProgressColumn(show_speed=True)]
    progress_list += [ItemsPerSecColumn(suffix=suffix)] if suffix else []
    progress_list += [TimeRemainingColumn(elapsed_when_finished=True, compact=True)]
    return Progress(*progress_list, console=console or CONSOLE, transient=True)
