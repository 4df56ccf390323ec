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
Properties of a logic checked at the value level: internalized consistency and equivalence, paraconsistency,
and the family constraints, one logic at a time or vectorized over a batch of logics.
"""

from __future__ import annotations

import functools
import itertools
from typing import Callable, Dict

import numpy as np

from trilogic.family.logic_spec import Cell, LogicSpec, cells
from trilogic.family.constraints import allowed_values
from trilogic.family.tables import BOTH_INDEX, FALSE_INDEX, LogicTables, valuation_grid
from trilogic.laws.axioms import mp_preservation_mask
from trilogic.semantics.evaluation import EntailmentResult, entails, evaluate
from trilogic.semantics.formulas import Formula
from trilogic.semantics.truth_values import VALUES, TruthValue
from trilogic.syntax.parser import parse_formula


@functools.lru_cache(maxsize=None)
def consistency_formula() -> Formula:
    """``(x -> F) | (~x -> F)``: designated exactly when x is consistent."""
    return parse_formula("(x -> F) | (~x -> F)")


@functools.lru_cache(maxsize=None)
def equivalence_formula() -> Formula:
    """``(x <-> y) & (~x <-> ~y)``: designated exactly when x and y are equivalent."""
    return parse_formula("(x <-> y) & (~x <-> ~y)")


def internalized_consistency_table(logic: LogicSpec) -> Dict[TruthValue, TruthValue]:
    """Value of the consistency formula for each value of x."""
    return {x: evaluate(consistency_formula(), {"x": x}, logic) for x in VALUES}


def check_internalized_consistency(logic: LogicSpec) -> bool:
    """Whether the consistency formula is designated exactly when x is not both."""
    table = internalized_consistency_table(logic)
    return all(value.designated == (x is not TruthValue.BOTH) for x, value in table.items())


def internalized_equivalence_value(logic: LogicSpec, x: TruthValue, y: TruthValue) -> TruthValue:
    """Value of the equivalence formula at (x, y)."""
    return evaluate(equivalence_formula(), {"x": x, "y": y}, logic)


def check_internalized_equivalence(logic: LogicSpec) -> bool:
    """Whether the equivalence formula is designated exactly when x = y."""
    return all(
        internalized_equivalence_value(logic, x, y).designated == (x is y)
        for x, y in itertools.product(VALUES, repeat=2)
    )


@functools.lru_cache(maxsize=None)
def _explosion():
    return (parse_formula("p"), parse_formula("~p")), parse_formula("q")


def check_paraconsistency(logic: LogicSpec) -> EntailmentResult:
    """The entailment ``{p, ~p} |= q``; a paraconsistent logic refutes it."""
    premises, conclusion = _explosion()
    return entails(premises, conclusion, logic)


def internalized_consistency_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): the consistency property for each logic of the batch."""
    grid = valuation_grid(["x"])
    designated = tables.evaluate(consistency_formula(), grid) != FALSE_INDEX
    return np.all(designated == (grid["x"] != BOTH_INDEX)[None, :], axis=1)


def internalized_equivalence_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): the equivalence property for each logic of the batch."""
    grid = valuation_grid(["x", "y"])
    designated = tables.evaluate(equivalence_formula(), grid) != FALSE_INDEX
    return np.all(designated == (grid["x"] == grid["y"])[None, :], axis=1)


def paraconsistency_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether each logic refutes ``{p, ~p} |= q``."""
    premises, conclusion = _explosion()
    grid = valuation_grid(["p", "q"])
    premises_hold = np.ones((len(tables), len(grid["p"])), dtype=bool)
    for premise in premises:
        premises_hold &= tables.evaluate(premise, grid) != FALSE_INDEX
    refuted = premises_hold & (tables.evaluate(conclusion, grid) == FALSE_INDEX)
    return np.any(refuted, axis=1)


def _cell_constraint_mask(tables: LogicTables, select: Callable[[Cell], bool]) -> np.ndarray:
    stacked = {
        "neg": tables.neg,
        "and": tables.and_.reshape(len(tables), 9),
        "or": tables.or_.reshape(len(tables), 9),
        "imp": tables.imp.reshape(len(tables), 9),
    }
    ok = np.ones(len(tables), dtype=bool)
    for connective, array in stacked.items():
        for offset, cell in enumerate(cells(connective)):
            if select(cell):
                allowed = np.array([value in allowed_values(connective, cell) for value in VALUES])
                ok &= allowed[array[:, offset]]
    return ok


def classical_containment_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether each logic agrees with the classical tables on t and f."""
    return _cell_constraint_mask(tables, lambda cell: all(value.classical for value in cell))


def designatedness_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether each logic meets the designatedness constraints on cells with b."""
    return _cell_constraint_mask(tables, lambda cell: not all(value.classical for value in cell))


FAMILY_PROPERTIES: Dict[str, Callable[[LogicTables], np.ndarray]] = {
    "classical containment": classical_containment_mask,
    "designatedness": designatedness_mask,
    "modus ponens": mp_preservation_mask,
    "internalized consistency": internalized_consistency_mask,
    "internalized equivalence": internalized_equivalence_mask,
    "paraconsistency": paraconsistency_mask,
}
"""Family-wide checks by name; each holds for every member of the family."""
