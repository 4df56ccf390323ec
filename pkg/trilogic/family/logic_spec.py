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
Concrete three-valued truth tables for one logic of the family, and the LP(->,F) tables.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, replace
from typing import Dict, Tuple

from trilogic.semantics.formulas import CONNECTIVES, Connective
from trilogic.semantics.truth_values import VALUES, TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH

Cell = Tuple[TruthValue, ...]
"""Argument tuple of one table cell."""


def cells(connective: Connective) -> Tuple[Cell, ...]:
    """Argument tuples of a connective's table in row-major order, rows and columns ordered t, f, b."""
    arity = 1 if connective == "neg" else 2
    return tuple(itertools.product(VALUES, repeat=arity))


def cell_offset(cell: Cell) -> int:
    """Position of a cell inside the flattened table."""
    offset = 0
    for value in cell:
        offset = offset * 3 + value.index
    return offset


@dataclass(frozen=True)
class LogicSpec:
    """Complete truth tables of one logic: one unary and three binary connectives.

    Binary tables are stored row-major with rows indexed by the left argument.
    A LogicSpec may hold arbitrary tables; membership in the family is decided by
    :func:`trilogic.family.constraints.satisfies_family_constraints`.
    """

    neg_table: Tuple[TruthValue, ...]
    """3 cells, argument order t, f, b"""
    and_table: Tuple[TruthValue, ...]
    """9 cells"""
    or_table: Tuple[TruthValue, ...]
    """9 cells"""
    imp_table: Tuple[TruthValue, ...]
    """9 cells"""

    def __post_init__(self):
        assert len(self.neg_table) == 3, "negation table needs 3 cells"
        for connective in ("and", "or", "imp"):
            assert len(self.table(connective)) == 9, f"{connective} table needs 9 cells"

    def neg(self, x: TruthValue) -> TruthValue:
        """Negation."""
        return self.neg_table[x.index]

    def and_(self, x: TruthValue, y: TruthValue) -> TruthValue:
        """Conjunction."""
        return self.and_table[x.index * 3 + y.index]

    def or_(self, x: TruthValue, y: TruthValue) -> TruthValue:
        """Disjunction."""
        return self.or_table[x.index * 3 + y.index]

    def imp(self, x: TruthValue, y: TruthValue) -> TruthValue:
        """Implication."""
        return self.imp_table[x.index * 3 + y.index]

    def table(self, connective: Connective) -> Tuple[TruthValue, ...]:
        """Flattened table of a connective."""
        return getattr(self, f"{connective}_table")

    def apply(self, connective: Connective, cell: Cell) -> TruthValue:
        """Value of a connective on an argument tuple."""
        return self.table(connective)[cell_offset(cell)]

    def with_table(self, connective: Connective, table: Tuple[TruthValue, ...]) -> LogicSpec:
        """Copy of this logic with one connective's table replaced."""
        return replace(self, **{f"{connective}_table": tuple(table)})

    def with_cell(self, connective: Connective, cell: Cell, value: TruthValue) -> LogicSpec:
        """Copy of this logic with a single cell changed."""
        table = list(self.table(connective))
        table[cell_offset(cell)] = value
        return self.with_table(connective, tuple(table))

    def to_strings(self) -> Dict[str, str]:
        """Tables as symbol strings keyed ``neg``, ``and``, ``or``, ``imp``."""
        return {connective: "".join(v.value for v in self.table(connective)) for connective in CONNECTIVES}

    @classmethod
    def from_strings(cls, neg: str, and_: str, or_: str, imp: str) -> LogicSpec:
        """Build tables from symbol strings such as ``"ftb"`` and ``"tbf..."``."""
        if len(neg) != 3 or any(len(table) != 9 for table in (and_, or_, imp)):
            raise ValueError("Expected a 3 character negation table and 9 character binary tables")

        def convert(symbols: str) -> Tuple[TruthValue, ...]:
            return tuple(TruthValue.from_symbol(symbol) for symbol in symbols)

        return cls(convert(neg), convert(and_), convert(or_), convert(imp))

    def __str__(self) -> str:
        return " ".join(f"{name}={table}" for name, table in self.to_strings().items())


def _tabulate(connective: Connective, clause) -> Tuple[TruthValue, ...]:
    return tuple(clause(*cell) for cell in cells(connective))


def _lp_neg(x: TruthValue) -> TruthValue:
    if x is F:
        return T
    if x is T:
        return F
    return B


def _lp_and(x: TruthValue, y: TruthValue) -> TruthValue:
    if x is T and y is T:
        return T
    if F in (x, y):
        return F
    return B


def _lp_or(x: TruthValue, y: TruthValue) -> TruthValue:
    if T in (x, y):
        return T
    if x is F and y is F:
        return F
    return B


def _lp_imp(x: TruthValue, y: TruthValue) -> TruthValue:
    return T if x is F else y


@functools.lru_cache(maxsize=None)
def lp_logic() -> LogicSpec:
    """The tables of LP(->,F), built from its valuation clauses."""
    return LogicSpec(
        neg_table=_tabulate("neg", _lp_neg),
        and_table=_tabulate("and", _lp_and),
        or_table=_tabulate("or", _lp_or),
        imp_table=_tabulate("imp", _lp_imp),
    )


def classical_value(connective: Connective, cell: Cell) -> TruthValue:
    """Two-valued table entry for a cell whose arguments are all classical."""
    assert all(value.classical for value in cell), "classical tables are defined on t and f only"
    # LP agrees with the classical tables on classical arguments
    return lp_logic().apply(connective, cell)
