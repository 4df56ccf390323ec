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
Deciding law schemas against a logic by value assignment, one logic at a time or for a whole batch of logics.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from trilogic.configs.base_config import WorkerConfig
from trilogic.family.logic_spec import LogicSpec
from trilogic.family.tables import LogicTables, valuation_grid
from trilogic.laws.schemas import NUM_BUILTIN_LAWS, LawSchema, builtin_laws
from trilogic.semantics.classical import classical_eval
from trilogic.semantics.evaluation import evaluate
from trilogic.semantics.truth_values import CLASSICAL_VALUES, TruthValue, format_valuation, valuations
from trilogic.utils.profiler import time_function


@dataclass(frozen=True)
class LawCounterexample:
    """A meta-assignment on which the two sides of a law take different values."""

    assignment: Mapping[str, TruthValue]
    lhs: TruthValue
    rhs: TruthValue

    def __str__(self) -> str:
        return f"{format_valuation(self.assignment)}: lhs={self.lhs}, rhs={self.rhs}"


def counterexample(law: LawSchema, logic: LogicSpec) -> Optional[LawCounterexample]:
    """Least meta-assignment (A < B < C, t < f < b) separating the two sides, or None if the law holds."""
    for assignment in valuations(law.metavariables):
        lhs = evaluate(law.lhs, assignment, logic)
        rhs = evaluate(law.rhs, assignment, logic)
        if lhs is not rhs:
            return LawCounterexample(assignment=assignment, lhs=lhs, rhs=rhs)
    return None


def check_law(law: LawSchema, logic: LogicSpec) -> bool:
    """Whether both sides agree on every meta-assignment."""
    return counterexample(law, logic) is None


def check_law_classically(law: LawSchema) -> bool:
    """Whether both sides agree under two-valued evaluation."""
    return all(
        classical_eval(law.lhs, assignment) is classical_eval(law.rhs, assignment)
        for assignment in valuations(law.metavariables, CLASSICAL_VALUES)
    )


@dataclass(frozen=True)
class LawProfile:
    """Which of the built-in laws (1)-(23) a logic satisfies, law (1) first."""

    satisfied: Tuple[bool, ...]

    def __post_init__(self):
        assert len(self.satisfied) == NUM_BUILTIN_LAWS, "a profile covers every built-in law"

    @property
    def bits(self) -> str:
        """Bitstring form, law (1) first."""
        return "".join("1" if holds else "0" for holds in self.satisfied)

    def holds(self, number: int) -> bool:
        """Whether law ``number`` (1-based) is satisfied."""
        if not 1 <= number <= NUM_BUILTIN_LAWS:
            raise ValueError(f"Law number must be in [1, {NUM_BUILTIN_LAWS}], got {number}")
        return self.satisfied[number - 1]

    def failed(self) -> List[int]:
        """Numbers of the laws that do not hold."""
        return [number for number, holds in enumerate(self.satisfied, start=1) if not holds]

    @classmethod
    def from_bits(cls, bits: str) -> LawProfile:
        """Inverse of :attr:`bits`."""
        if len(bits) != NUM_BUILTIN_LAWS or set(bits) - {"0", "1"}:
            raise ValueError(f"A profile is {NUM_BUILTIN_LAWS} characters from {{0, 1}}, got {bits!r}")
        return cls(tuple(char == "1" for char in bits))

    def __str__(self) -> str:
        return self.bits


def law_profile(logic: LogicSpec) -> LawProfile:
    """Profile of one logic over the built-in laws."""
    return LawProfile(tuple(check_law(law, logic) for law in builtin_laws()))


def law_mask(law: LawSchema, tables: LogicTables) -> np.ndarray:
    """Boolean array of shape (L,): whether each logic of the batch satisfies the law."""
    grid = valuation_grid(law.metavariables)
    return np.all(tables.evaluate(law.lhs, grid) == tables.evaluate(law.rhs, grid), axis=1)


def profile_matrix(tables: LogicTables, laws: Optional[Sequence[LawSchema]] = None) -> np.ndarray:
    """Boolean array of shape (L, len(laws)); defaults to the built-in laws."""
    laws = builtin_laws() if laws is None else laws
    if len(tables) == 0 or not laws:
        return np.zeros((len(tables), len(laws)), dtype=bool)
    return np.stack([law_mask(law, tables) for law in laws], axis=1)


@time_function
def family_law_profiles(
    config: Optional[WorkerConfig] = None,
    laws: Optional[Sequence[LawSchema]] = None,
    tables: Optional[LogicTables] = None,
    on_chunk: Optional[Callable[[int], None]] = None,
) -> np.ndarray:
    """Profiles of a batch of logics (the whole family by default), computed in id chunks on worker threads.

    Args:
        config: worker count and chunk size.
        laws: laws to check, the built-in ones by default.
        tables: logics to check, the whole family by default.
        on_chunk: called with the number of logics in each finished chunk, in id order.

    Returns:
        Boolean array of shape (L, len(laws)), rows in the order of ``tables``.
    """
    config = WorkerConfig() if config is None else config
    laws = builtin_laws() if laws is None else list(laws)
    tables = LogicTables.family() if tables is None else tables

    chunks = [
        tables.subset(np.arange(start, min(start + config.chunk_size, len(tables))))
        for start in range(0, len(tables), config.chunk_size)
    ]
    if not chunks:
        return np.zeros((0, len(laws)), dtype=bool)

    results = []
    with ThreadPoolExecutor(max_workers=config.num_threads) as executor:
        for chunk, result in zip(chunks, executor.map(lambda chunk: profile_matrix(chunk, laws), chunks)):
            results.append(result)
            if on_chunk is not None:
                on_chunk(len(chunk))
    return np.concatenate(results, axis=0)
