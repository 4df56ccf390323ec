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
Exhaustive comparison of the tautologies of a logic with the classical tautologies, over all formulas up to a
depth bound. Formulas are deduplicated by the truth function they compute, each function being represented by
its least formula in (size, constructor order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from trilogic.configs.base_config import ScanConfig
from trilogic.family.logic_spec import LogicSpec, lp_logic
from trilogic.family.tables import BOTH_INDEX, FALSE_INDEX, TRUE_INDEX, valuation_grid
from trilogic.semantics.formulas import And, Atom, Falsum, Formula, Implies, Not, Or
from trilogic.semantics.truth_values import TruthValue
from trilogic.utils.profiler import time_function

MAX_SCAN_DEPTH = 4
MAX_SCAN_ATOMS = 2
SCAN_ATOMS = ("p", "q")

# bound on (left block) x (all functions) x (valuations) cells materialized at once
_BLOCK_CELLS = 1 << 22


class ScanBoundsError(ValueError):
    """Raised for scan bounds outside depth 0-4 and 1-2 atoms."""


@dataclass(frozen=True)
class TautologyMismatch:
    """A truth function that is a tautology of exactly one of the two logics."""

    formula: Formula
    """least formula computing the function"""
    tautology: bool
    """whether the scanned logic designates it under every valuation"""
    classical_tautology: bool
    witness: Dict[str, TruthValue] = field(compare=False)
    """least valuation refuting whichever side is a non-tautology"""


@dataclass(frozen=True)
class CoincidenceScan:
    """Result of :func:`tautology_coincidence_scan`."""

    max_depth: int
    num_atoms: int
    implication_free: bool
    representatives: Tuple[Formula, ...]
    """least formula of each truth function reached, ordered by size and constructor order"""
    mismatches: Tuple[TautologyMismatch, ...]
    codes: Dict[int, Formula] = field(compare=False, repr=False)
    logic: LogicSpec = field(compare=False, repr=False)

    @property
    def num_functions(self) -> int:
        """Distinct truth functions reached within the bounds."""
        return len(self.representatives)

    @property
    def coincide(self) -> bool:
        """Whether both logics have the same tautologies within the bounds."""
        return not self.mismatches

    def representative_of(self, formula: Formula) -> Optional[Formula]:
        """Least formula of the scan computing the same function as ``formula``, if its function was reached."""
        atoms = SCAN_ATOMS[: self.num_atoms]
        if not formula.atoms() <= set(atoms):
            return None
        values = _evaluate(formula, _tables_of(self.logic), valuation_grid(atoms), len(_powers(self.num_atoms)))
        return self.codes.get(int(values @ _powers(self.num_atoms)))


def _tables_of(logic: LogicSpec) -> Dict[str, np.ndarray]:
    return {
        connective: np.array([value.index for value in logic.table(connective)], dtype=np.intp).reshape(
            (3,) if connective == "neg" else (3, 3)
        )
        for connective in ("neg", "and", "or", "imp")
    }


def _powers(num_atoms: int) -> np.ndarray:
    return 3 ** np.arange(3**num_atoms, dtype=np.int64)


def _evaluate(formula: Formula, tables: Dict[str, np.ndarray], grid: Dict[str, np.ndarray], width: int) -> np.ndarray:
    if isinstance(formula, Atom):
        return grid[formula.name]
    if isinstance(formula, Falsum):
        return np.full(width, FALSE_INDEX, dtype=np.intp)
    if isinstance(formula, Not):
        return tables["neg"][_evaluate(formula.child, tables, grid, width)]
    connective = {And: "and", Or: "or", Implies: "imp"}[type(formula)]
    left = _evaluate(formula.left, tables, grid, width)
    return tables[connective][left, _evaluate(formula.right, tables, grid, width)]


_BINARY = ((And, "and"), (Or, "or"), (Implies, "imp"))


def _next_level(
    reps: Sequence[Formula],
    values: np.ndarray,
    tables: Dict[str, np.ndarray],
    powers: np.ndarray,
    implication_free: bool,
) -> Dict[int, Formula]:
    """Least new formula per truth function among one-connective combinations of the current representatives."""
    n = len(reps)
    sizes = np.array([rep.size for rep in reps], dtype=np.int64)
    sentinel = np.iinfo(np.int64).max
    best = np.full(3 ** len(powers), sentinel, dtype=np.int64)

    # (size, rank, left index, right index) packed into one integer; index order is sort_key order
    def pack(size: np.ndarray, rank: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        return ((size * 8 + rank) * n + left) * n + right

    index = np.arange(n, dtype=np.int64)
    codes = tables["neg"][values] @ powers
    np.minimum.at(best, codes, pack(sizes + 1, Not.rank, index, np.zeros_like(index)))

    block = max(1, _BLOCK_CELLS // max(1, n * len(powers)))
    for node, connective in _BINARY:
        if implication_free and node is Implies:
            continue
        for start in range(0, n, block):
            left = index[start : start + block]
            combined = tables[connective][values[left][:, None, :], values[None, :, :]]
            codes = (combined @ powers).reshape(-1)
            keys = pack(1 + sizes[left][:, None] + sizes[None, :], node.rank, left[:, None], index[None, :])
            np.minimum.at(best, codes, keys.reshape(-1))

    found: Dict[int, Formula] = {}
    for code in np.flatnonzero(best != sentinel):
        key = int(best[code])
        key, right = divmod(key, n)
        key, left = divmod(key, n)
        rank = key % 8
        if rank == Not.rank:
            found[int(code)] = Not(reps[left])
        else:
            node = next(node for node, _ in _BINARY if node.rank == rank)
            found[int(code)] = node(reps[left], reps[right])
    return found


def _mismatch(formula: Formula, values: np.ndarray, grid: Dict[str, np.ndarray]) -> Optional[TautologyMismatch]:
    classical_columns = np.all([column != BOTH_INDEX for column in grid.values()], axis=0)
    tautology = bool(np.all(values != FALSE_INDEX))
    classical_tautology = bool(np.all(values[classical_columns] == TRUE_INDEX))
    if tautology == classical_tautology:
        return None
    if tautology:
        refuting = classical_columns & (values != TRUE_INDEX)
    else:
        refuting = values == FALSE_INDEX
    column = int(np.flatnonzero(refuting)[0])
    witness = {name: TruthValue.from_index(int(grid[name][column])) for name in sorted(grid)}
    return TautologyMismatch(
        formula=formula, tautology=tautology, classical_tautology=classical_tautology, witness=witness
    )


@time_function
def tautology_coincidence_scan(
    max_depth: int = 2, num_atoms: int = 1, logic: Optional[LogicSpec] = None, implication_free: bool = False
) -> CoincidenceScan:
    """Compare the tautologies of a logic with the classical ones over every formula up to a depth bound.

    Args:
        max_depth: largest depth enumerated, in [0, 4]; atoms and F have depth 0.
        num_atoms: 1 (p) or 2 (p, q).
        logic: logic to compare, LP by default.
        implication_free: leave out ``->``.

    Returns:
        The representatives of all truth functions reached and the mismatching ones.
    """
    if not 0 <= max_depth <= MAX_SCAN_DEPTH:
        raise ScanBoundsError(f"max_depth must be in [0, {MAX_SCAN_DEPTH}], got {max_depth}")
    if not 1 <= num_atoms <= MAX_SCAN_ATOMS:
        raise ScanBoundsError(f"num_atoms must be in [1, {MAX_SCAN_ATOMS}], got {num_atoms}")
    logic = lp_logic() if logic is None else logic
    tables = _tables_of(logic)
    atoms = SCAN_ATOMS[:num_atoms]
    grid = valuation_grid(atoms)
    powers = _powers(num_atoms)

    by_code: Dict[int, Formula] = {}
    for leaf in [Atom(name) for name in atoms] + [Falsum()]:
        by_code.setdefault(int(_evaluate(leaf, tables, grid, len(powers)) @ powers), leaf)

    for _ in range(max_depth):
        reps = sorted(by_code.values(), key=lambda formula: formula.sort_key())
        values = np.stack([_evaluate(rep, tables, grid, len(powers)) for rep in reps])
        for code, candidate in _next_level(reps, values, tables, powers, implication_free).items():
            current = by_code.get(code)
            if current is None or candidate.sort_key() < current.sort_key():
                by_code[code] = candidate

    representatives = tuple(sorted(by_code.values(), key=lambda formula: formula.sort_key()))
    mismatches: List[TautologyMismatch] = []
    for rep in representatives:
        mismatch = _mismatch(rep, _evaluate(rep, tables, grid, len(powers)), grid)
        if mismatch is not None:
            mismatches.append(mismatch)
    return CoincidenceScan(
        max_depth=max_depth,
        num_atoms=num_atoms,
        implication_free=implication_free,
        representatives=representatives,
        mismatches=tuple(mismatches),
        codes=by_code,
        logic=logic,
    )


def scan_from_config(config: ScanConfig, logic: Optional[LogicSpec] = None) -> CoincidenceScan:
    """Run :func:`tautology_coincidence_scan` with the bounds of a config."""
    return tautology_coincidence_scan(
        max_depth=config.max_depth,
        num_atoms=config.num_atoms,
        logic=logic,
        implication_free=config.implication_free,
    )
