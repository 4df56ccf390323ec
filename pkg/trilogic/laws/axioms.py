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
Hilbert-style axiom schemas and modus ponens, checked for soundness against the tables of a logic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import List, Mapping, Optional, Tuple

import numpy as np

from trilogic.family.logic_spec import LogicSpec
from trilogic.family.tables import LogicTables, valuation_grid
from trilogic.semantics.evaluation import evaluate
from trilogic.semantics.formulas import Formula
from trilogic.semantics.truth_values import VALUES, TruthValue, format_valuation, valuations
from trilogic.syntax.parser import parse_schema


@dataclass(frozen=True)
class AxiomSchema:
    """A formula template over metavariables, valid in a logic iff every instance is designated."""

    name: str
    formula: Formula
    label: str = ""

    def __str__(self) -> str:
        return f"{self.name}: {self.formula.to_text()}"


@dataclass(frozen=True)
class SchemaVerdict:
    """Outcome of checking one schema; the counterexample is the least undesignating meta-assignment."""

    schema: AxiomSchema
    valid: bool
    counterexample: Optional[Mapping[str, TruthValue]] = None
    value: Optional[TruthValue] = None

    def __post_init__(self):
        assert self.valid == (self.counterexample is None), "invalid verdicts carry a counterexample"

    def __str__(self) -> str:
        if self.valid:
            return f"{self.schema.name} valid"
        return f"{self.schema.name} invalid at {format_valuation(self.counterexample)} (value {self.value})"


_AXIOM_SOURCES = (
    ("A -> (B -> A)", "weakening"),
    ("((A -> B) -> A) -> A", "Peirce's law"),
    ("(A -> (B -> C)) -> ((A -> B) -> (A -> C))", "self-distribution"),
    ("F -> A", "ex falso"),
    ("(A & B) -> A", "left conjunction elimination"),
    ("(A & B) -> B", "right conjunction elimination"),
    ("A -> (B -> (A & B))", "conjunction introduction"),
    ("A -> (A | B)", "left disjunction introduction"),
    ("B -> (A | B)", "right disjunction introduction"),
    ("(A -> C) -> ((B -> C) -> ((A | B) -> C))", "disjunction elimination"),
    ("~~A <-> A", "double negation"),
    ("~(A -> B) <-> A & ~B", "negated implication"),
    ("~(A & B) <-> ~A | ~B", "negated conjunction"),
    ("~(A | B) <-> ~A & ~B", "negated disjunction"),
    ("A | ~A", "excluded middle"),
)

NUM_AXIOM_SCHEMAS = len(_AXIOM_SOURCES)


@functools.lru_cache(maxsize=None)
def axiom_schemas() -> Tuple[AxiomSchema, ...]:
    """The 15 axiom schemas: ten for the positive fragment, four moving negation inward, excluded middle."""
    return tuple(
        AxiomSchema(name=f"Ax{number}", formula=parse_schema(text), label=label)
        for number, (text, label) in enumerate(_AXIOM_SOURCES, start=1)
    )


@functools.lru_cache(maxsize=None)
def collapse_schema() -> AxiomSchema:
    """``~A -> (A -> B)``; adding it to the axioms yields classical logic."""
    return AxiomSchema(name="collapse", formula=parse_schema("~A -> (A -> B)"), label="explosion")


def check_schema(schema: AxiomSchema, logic: LogicSpec) -> SchemaVerdict:
    """Whether every meta-assignment evaluates the schema to a designated value."""
    for assignment in valuations(schema.formula.atoms()):
        value = evaluate(schema.formula, assignment, logic)
        if not value.designated:
            return SchemaVerdict(schema=schema, valid=False, counterexample=assignment, value=value)
    return SchemaVerdict(schema=schema, valid=True)


def check_axiom_schemas(logic: LogicSpec) -> List[SchemaVerdict]:
    """One verdict per axiom schema, in table order."""
    return [check_schema(schema, logic) for schema in axiom_schemas()]


def check_collapse_schema(logic: LogicSpec) -> SchemaVerdict:
    """Verdict for ``~A -> (A -> B)``, expected invalid for paraconsistent logics."""
    return check_schema(collapse_schema(), logic)


def mp_violation(logic: LogicSpec) -> Optional[Tuple[TruthValue, TruthValue]]:
    """First value pair (x, y) with x and x -> y designated but y not, or None."""
    for x, y in itertools.product(VALUES, repeat=2):
        if x.designated and logic.imp(x, y).designated and not y.designated:
            return x, y
    return None


def check_mp_preservation(logic: LogicSpec) -> bool:
    """Whether modus ponens preserves designatedness."""
    return mp_violation(logic) is None


def schema_validity_mask(schema: AxiomSchema, tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether the schema is valid in each logic of the batch."""
    grid = valuation_grid(schema.formula.atoms())
    values = tables.evaluate(schema.formula, grid)
    return np.all(values != TruthValue.FALSE.index, axis=1)


def mp_preservation_mask(tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether modus ponens preserves designatedness in each logic."""
    designated = np.array([value.designated for value in VALUES])
    premises = designated[:, None] & designated[tables.imp]
    return ~np.any(premises & ~designated[None, None, :], axis=(1, 2))
