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
Constraints that properties (a) containment and (b) proper basic connectives impose on the truth tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from trilogic.family.logic_spec import Cell, LogicSpec, cells, classical_value
from trilogic.semantics.formulas import Connective
from trilogic.semantics.truth_values import TruthValue

# designation each binary cell must have, given the designation of its arguments
DESIGNATION_RULES: Dict[Connective, Callable[[bool, bool], bool]] = {
    "and": lambda x, y: x and y,
    "or": lambda x, y: x or y,
    "imp": lambda x, y: not x or y,
}

DESIGNATION_DESCRIPTIONS: Dict[Connective, str] = {
    "neg": "~b must be designated",
    "and": "A & B is designated iff both A and B are designated",
    "or": "A | B is designated iff A or B is designated",
    "imp": "A -> B is designated iff A is not designated or B is designated (deduction theorem)",
}

# order in which connectives are checked and laid out in the logic id
CHECK_ORDER = ("and", "or", "neg", "imp")


@dataclass(frozen=True)
class ConstraintViolation:
    """First table cell found to break a family constraint."""

    connective: Connective
    cell: Cell
    value: TruthValue
    constraint: str

    def __str__(self) -> str:
        arguments = ",".join(v.value for v in self.cell)
        return f"{self.connective}({arguments}) = {self.value.value} violates: {self.constraint}"


@dataclass(frozen=True)
class ConstraintReport:
    """Verdict of :func:`satisfies_family_constraints`."""

    violation: Optional[ConstraintViolation] = None

    @property
    def ok(self) -> bool:
        """Whether every constraint holds."""
        return self.violation is None

    def __bool__(self) -> bool:
        return self.ok


def allowed_values(connective: Connective, cell: Cell) -> frozenset:
    """Values a family member may put in a cell."""
    if all(value.classical for value in cell):
        return frozenset({classical_value(connective, cell)})
    if connective == "neg":
        designated = True
    else:
        designated = DESIGNATION_RULES[connective](cell[0].designated, cell[1].designated)
    return frozenset(value for value in TruthValue if value.designated == designated)


def _cell_violation(connective: Connective, cell: Cell, value: TruthValue) -> Optional[ConstraintViolation]:
    if value in allowed_values(connective, cell):
        return None
    if all(argument.classical for argument in cell):
        constraint = f"agrees with the classical table ({classical_value(connective, cell).value})"
    else:
        constraint = DESIGNATION_DESCRIPTIONS[connective]
    return ConstraintViolation(connective, cell, value, constraint)


def satisfies_family_constraints(tables: LogicSpec) -> ConstraintReport:
    """Check candidate tables against the classical restriction and the designatedness constraints.

    Args:
        tables: arbitrary three-valued tables.

    Returns:
        A report that is truthy iff the tables define a member of the family, naming the first violated
        constraint and cell otherwise.
    """
    for connective in CHECK_ORDER:
        for cell in cells(connective):
            violation = _cell_violation(connective, cell, tables.apply(connective, cell))
            if violation is not None:
                return ConstraintReport(violation)
    return ConstraintReport()
