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
Enumeration of the 8192 family members and their canonical 13 bit identity.

Every member is determined by its choices on the free table entries, each of which is either t or b.
A logic id packs those choices into 13 bits, the first free entry being the most significant bit and
a set bit meaning b.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Tuple

from trilogic.family.constraints import allowed_values, satisfies_family_constraints
from trilogic.family.logic_spec import Cell, LogicSpec, cells, classical_value
from trilogic.semantics.formulas import Connective
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH

FREE_CELLS: Tuple[Tuple[Connective, Cell], ...] = (
    ("and", (T, B)),
    ("and", (B, T)),
    ("and", (B, B)),
    ("or", (T, B)),
    ("or", (B, T)),
    ("or", (B, B)),
    ("or", (B, F)),
    ("or", (F, B)),
    ("neg", (B,)),
    ("imp", (T, B)),
    ("imp", (B, T)),
    ("imp", (B, B)),
    ("imp", (F, B)),
)
"""Free entries in bit order, most significant first."""

NUM_BITS = len(FREE_CELLS)
FAMILY_SIZE = 1 << NUM_BITS
MAX_LOGIC_ID = FAMILY_SIZE - 1


class InvalidLogicError(ValueError):
    """Raised for tables outside the family or ids outside [0, 8191]."""


def _base_logic() -> LogicSpec:
    """Tables with every fixed entry filled in and every free entry set to t."""
    tables: Dict[str, Tuple[TruthValue, ...]] = {}
    for connective in ("neg", "and", "or", "imp"):
        row: List[TruthValue] = []
        for cell in cells(connective):
            allowed = allowed_values(connective, cell)
            if all(value.classical for value in cell):
                row.append(classical_value(connective, cell))
            elif len(allowed) == 1:
                (value,) = allowed
                row.append(value)
            else:
                row.append(T)
        tables[f"{connective}_table"] = tuple(row)
    return LogicSpec(**tables)


BASE_LOGIC = _base_logic()

assert {
    (connective, cell) for connective in ("neg", "and", "or", "imp") for cell in cells(connective)
    if len(allowed_values(connective, cell)) > 1
} == set(FREE_CELLS), "free cell layout out of sync with the family constraints"


def bit_weight(position: int) -> int:
    """Numeric weight of the free entry at a position of :data:`FREE_CELLS`."""
    return 1 << (NUM_BITS - 1 - position)


def decode(logic_id: int) -> LogicSpec:
    """Tables of the logic with the given id.

    Args:
        logic_id: integer in [0, 8191].
    """
    if isinstance(logic_id, bool) or not isinstance(logic_id, int) or not 0 <= logic_id <= MAX_LOGIC_ID:
        raise InvalidLogicError(f"Logic id must be an integer in [0, {MAX_LOGIC_ID}], got {logic_id!r}")
    logic = BASE_LOGIC
    for position, (connective, cell) in enumerate(FREE_CELLS):
        if logic_id & bit_weight(position):
            logic = logic.with_cell(connective, cell, B)
    return logic


def encode(logic: LogicSpec) -> int:
    """Id of a family member.

    Args:
        logic: tables satisfying the family constraints.
    """
    report = satisfies_family_constraints(logic)
    if not report.ok:
        raise InvalidLogicError(f"Tables are not a member of the family: {report.violation}")
    logic_id = 0
    for position, (connective, cell) in enumerate(FREE_CELLS):
        if logic.apply(connective, cell) is B:
            logic_id |= bit_weight(position)
    return logic_id


def enumerate_logics() -> Iterator[LogicSpec]:
    """All family members in increasing id order."""
    for logic_id in range(FAMILY_SIZE):
        yield decode(logic_id)


def free_cells_of(connective: Connective) -> Tuple[Cell, ...]:
    """Free entries of one connective in bit order."""
    return tuple(cell for name, cell in FREE_CELLS if name == connective)


def candidate_tables(connective: Connective) -> List[Tuple[TruthValue, ...]]:
    """Every table the family permits for one connective, ordered like the id bits (all t first).

    There are 8 for conjunction, 32 for disjunction, 2 for negation and 16 for implication.
    """
    free = free_cells_of(connective)
    tables = []
    for choice in itertools.product((T, B), repeat=len(free)):
        logic = BASE_LOGIC
        for cell, value in zip(free, choice):
            logic = logic.with_cell(connective, cell, value)
        tables.append(logic.table(connective))
    return tables
