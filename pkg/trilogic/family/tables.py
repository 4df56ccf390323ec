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
Batches of logics stored as numpy lookup tables, for evaluating a formula under many logics and many
valuations at once.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Union

import numpy as np

from trilogic.family.enumeration import BASE_LOGIC, FAMILY_SIZE, FREE_CELLS, InvalidLogicError, bit_weight, encode
from trilogic.family.logic_spec import LogicSpec, cell_offset
from trilogic.semantics.evaluation import MissingAtomError
from trilogic.semantics.formulas import And, Atom, Falsum, Formula, Implies, Not, Or
from trilogic.semantics.truth_values import TruthValue

TRUE_INDEX = TruthValue.TRUE.index
FALSE_INDEX = TruthValue.FALSE.index
BOTH_INDEX = TruthValue.BOTH.index
VALUE_DTYPE = np.uint8
"""Element type of the stacked tables."""


def valuation_grid(atoms: Iterable[str], classical_only: bool = False) -> Dict[str, np.ndarray]:
    """Columns of all valuations over the atoms, in lexicographic order (first atom varies slowest).

    Args:
        atoms: atom names; they are sorted before enumeration.
        classical_only: restrict to the values t and f.

    Returns:
        A mapping from atom name to an int array of value indices, one entry per valuation.
    """
    names = sorted(set(atoms))
    if not names:
        return {}
    values = (TRUE_INDEX, FALSE_INDEX) if classical_only else (TRUE_INDEX, FALSE_INDEX, BOTH_INDEX)
    rows = np.array(list(itertools.product(values, repeat=len(names))), dtype=np.intp).reshape(-1, len(names))
    return {name: rows[:, i] for i, name in enumerate(names)}


def _family_id(logic: LogicSpec) -> int:
    try:
        return encode(logic)
    except InvalidLogicError:
        return -1


def _table_array(logic: LogicSpec, connective: str) -> np.ndarray:
    return np.array([value.index for value in logic.table(connective)], dtype=VALUE_DTYPE)


@dataclass(frozen=True, eq=False)
class LogicTables:
    """Stacked truth tables of ``L`` logics as ``uint8`` value indices.

    Attributes:
        ids: logic ids, shape (L,).
        neg: negation tables, shape (L, 3).
        and_: conjunction tables, shape (L, 3, 3).
        or_: disjunction tables, shape (L, 3, 3).
        imp: implication tables, shape (L, 3, 3).
    """

    ids: np.ndarray
    neg: np.ndarray
    and_: np.ndarray
    or_: np.ndarray
    imp: np.ndarray

    def __len__(self) -> int:
        return int(self.ids.shape[0])

    @classmethod
    def from_specs(cls, logics: Iterable[LogicSpec]) -> LogicTables:
        """Stack the tables of several logics.

        Ids are computed with :func:`encode`; tables outside the family get -1.
        """
        logics = list(logics)
        return cls(
            ids=np.array([_family_id(logic) for logic in logics], dtype=np.int64),
            neg=np.stack([_table_array(logic, "neg") for logic in logics]),
            and_=np.stack([_table_array(logic, "and").reshape(3, 3) for logic in logics]),
            or_=np.stack([_table_array(logic, "or").reshape(3, 3) for logic in logics]),
            imp=np.stack([_table_array(logic, "imp").reshape(3, 3) for logic in logics]),
        )

    @classmethod
    def from_ids(cls, ids: Union[Sequence[int], np.ndarray]) -> LogicTables:
        """Decode a batch of logic ids without building a LogicSpec per logic."""
        ids = np.asarray(ids, dtype=np.int64).reshape(-1)
        assert np.all((ids >= 0) & (ids < FAMILY_SIZE)), "logic ids out of range"
        tables = {
            connective: np.tile(_table_array(BASE_LOGIC, connective), (ids.shape[0], 1))
            for connective in ("neg", "and", "or", "imp")
        }
        for position, (connective, cell) in enumerate(FREE_CELLS):
            chosen = (ids & bit_weight(position)) != 0
            tables[connective][chosen, cell_offset(cell)] = BOTH_INDEX
        return cls(
            ids=ids,
            neg=tables["neg"],
            and_=tables["and"].reshape(-1, 3, 3),
            or_=tables["or"].reshape(-1, 3, 3),
            imp=tables["imp"].reshape(-1, 3, 3),
        )

    @classmethod
    def family(cls) -> LogicTables:
        """All 8192 members in id order."""
        return _family_tables()

    def subset(self, mask: np.ndarray) -> LogicTables:
        """Logics selected by a boolean mask or index array."""
        return LogicTables(self.ids[mask], self.neg[mask], self.and_[mask], self.or_[mask], self.imp[mask])

    def spec(self, row: int) -> LogicSpec:
        """LogicSpec of one row."""
        return LogicSpec(
            neg_table=tuple(TruthValue.from_index(int(i)) for i in self.neg[row]),
            and_table=tuple(TruthValue.from_index(int(i)) for i in self.and_[row].reshape(-1)),
            or_table=tuple(TruthValue.from_index(int(i)) for i in self.or_[row].reshape(-1)),
            imp_table=tuple(TruthValue.from_index(int(i)) for i in self.imp[row].reshape(-1)),
        )

    def evaluate(self, formula: Formula, columns: Mapping[str, np.ndarray]) -> np.ndarray:
        """Evaluate a formula under every logic and every valuation of a grid.

        Args:
            formula: formula whose atoms are all columns of the grid.
            columns: value indices per atom, all of the same length K (see :func:`valuation_grid`).

        Returns:
            Value indices of shape (L, K).
        """
        width = len(next(iter(columns.values()))) if columns else 1
        rows = np.arange(len(self))[:, None]
        shape = (len(self), width)

        def walk(node: Formula) -> np.ndarray:
            if isinstance(node, Atom):
                if node.name not in columns:
                    raise MissingAtomError(node.name)
                return np.broadcast_to(columns[node.name], shape)
            if isinstance(node, Falsum):
                return np.full(shape, FALSE_INDEX, dtype=VALUE_DTYPE)
            if isinstance(node, Not):
                return self.neg[rows, walk(node.child)]
            if isinstance(node, And):
                return self.and_[rows, walk(node.left), walk(node.right)]
            if isinstance(node, Or):
                return self.or_[rows, walk(node.left), walk(node.right)]
            if isinstance(node, Implies):
                return self.imp[rows, walk(node.left), walk(node.right)]
            raise TypeError(f"Unknown formula node {type(node).__name__}")

        return walk(formula)


@functools.lru_cache(maxsize=1)
def _family_tables() -> LogicTables:
    return LogicTables.from_ids(np.arange(FAMILY_SIZE))
