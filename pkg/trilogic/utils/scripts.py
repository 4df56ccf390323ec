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

"""Helpers for running script commands."""

from __future__ import annotations

from rich.console import Console
from rich.markup import escape

from trilogic.family.enumeration import MAX_LOGIC_ID, InvalidLogicError, decode
from trilogic.family.logic_spec import LogicSpec, lp_logic

ERROR_CONSOLE = Console(width=120, stderr=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2


class UsageError(ValueError):
    """Raised for command-line input that cannot be acted on."""


def resolve_logic(name: str) -> LogicSpec:
    """Logic named on the command line: ``lp`` or a decimal id in [0, 8191]."""
    text = name.strip().lower()
    if text == "lp":
        return lp_logic()
    try:
        return decode(int(text))
    except (ValueError, InvalidLogicError) as exc:
        raise UsageError(f"--logic expects 'lp' or an integer in [0, {MAX_LOGIC_ID}], got {name!r}") from exc


def report_error(message: str) -> int:
    """Print an error on stderr and return the usage exit code."""
    ERROR_CONSOLE.rule("[bold red]ERROR", style="red")
    ERROR_CONSOLE.print(f"[bold red]{escape(message)}")
    ERROR_CONSOLE.rule(style="red")
    return EXIT_USAGE
