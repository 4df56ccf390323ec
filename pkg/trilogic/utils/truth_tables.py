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
Truth tables of a formula under a logic, as data rows and as rendered text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from rich import box
from rich.console import Console
from rich.table import Table

from trilogic.family.logic_spec import LogicSpec
from trilogic.semantics.evaluation import evaluate
from trilogic.semantics.formulas import Formula
from trilogic.semantics.truth_values import TruthValue, valuations

MAX_TABLE_ATOMS = 4


class TruthTableSizeError(ValueError):
    """Raised for formulas with more atoms than a readable table allows."""


@dataclass(frozen=True)
class TruthTableRow:
    """One valuation and the resulting value."""

    valuation: Dict[str, TruthValue]
    value: TruthValue


def truth_table_rows(formula: Formula, logic: LogicSpec) -> List[TruthTableRow]:
    """Rows in lexicographic valuation order (atoms sorted by name, t < f < b)."""
    atoms = formula.atoms()
    if len(atoms) > MAX_TABLE_ATOMS:
        raise TruthTableSizeError(f"truth tables are limited to {MAX_TABLE_ATOMS} atoms, formula has {len(atoms)}")
    return [TruthTableRow(valuation, evaluate(formula, valuation, logic)) for valuation in valuations(atoms)]


def truth_table(formula: Formula, logic: LogicSpec) -> Table:
    """rich Table with one column per atom and a result column; ``*`` marks designated results."""
    atoms = sorted(formula.atoms())
    table = Table(box=box.SIMPLE_HEAD, show_edge=False)
    for atom in atoms:
        table.add_column(atom, justify="center")
    table.add_column(formula.to_text(), justify="center", style="bold")
    for row in truth_table_rows(formula, logic):
        marker = "*" if row.value.designated else " "
        table.add_row(*(str(row.valuation[atom]) for atom in atoms), f"{row.value}{marker}")
    return table


def render_truth_table(formula: Formula, logic: LogicSpec) -> str:
    """Plain-text truth table."""
    console = Console(width=120, no_color=True, highlight=False)
    with console.capture() as out:
        console.print(truth_table(formula, logic))
    return out.get()
