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
Counting the family members that satisfy a set of laws, and the connective-by-connective uniqueness argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from trilogic.configs.base_config import WorkerConfig
from trilogic.family.enumeration import candidate_tables
from trilogic.family.logic_spec import LogicSpec, lp_logic
from trilogic.family.tables import LogicTables
from trilogic.laws.checking import check_law, family_law_profiles
from trilogic.laws.schemas import NUM_BUILTIN_LAWS, LawSchema, builtin_law
from trilogic.semantics.formulas import Connective
from trilogic.semantics.truth_values import TruthValue

STAGE_ORDER: Tuple[Connective, ...] = ("and", "or", "neg", "imp")
"""Order in which the uniqueness argument fixes the tables."""


class LawNumberError(ValueError):
    """Raised for law numbers outside [1, 23] or malformed law lists."""


class StagePreconditionError(ValueError):
    """Raised when a law uses a connective that is not fixed yet at the requested stage."""

    def __init__(self, law: LawSchema, connective: Connective, unfixed: FrozenSet[str]):
        self.law = law
        self.connective = connective
        self.unfixed = unfixed
        super().__init__(
            f"law ({law.number}) {law.lhs.to_text()} == {law.rhs.to_text()} uses {', '.join(sorted(unfixed))}, "
            f"which is not fixed when staging {connective}"
        )


def validate_law_numbers(numbers: Iterable[int]) -> FrozenSet[int]:
    """Check that every number names a built-in law."""
    numbers = frozenset(numbers)
    invalid = sorted(number for number in numbers if not 1 <= number <= NUM_BUILTIN_LAWS)
    if invalid:
        raise LawNumberError(f"Law numbers must be in [1, {NUM_BUILTIN_LAWS}], got {invalid}")
    return numbers


_RANGE = re.compile(r"^\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")


def parse_law_numbers(text: str) -> FrozenSet[int]:
    """Parse a list such as ``1-8,10-12``."""
    numbers = set()
    for item in text.split(","):
        match = _RANGE.match(item)
        if match is None:
            raise LawNumberError(f"Malformed law list item {item.strip()!r}, expected N or N-M")
        first = int(match.group(1))
        last = int(match.group(2)) if match.group(2) else first
        if last < first:
            raise LawNumberError(f"Empty law range {item.strip()!r}")
        numbers.update(range(first, last + 1))
    return validate_law_numbers(numbers)


def format_law_numbers(numbers: Iterable[int]) -> str:
    """Inverse of :func:`parse_law_numbers`, collapsing runs into ranges."""
    numbers = sorted(set(numbers))
    parts: List[str] = []
    start = None
    for i, number in enumerate(numbers):
        if start is None:
            start = number
        if i + 1 == len(numbers) or numbers[i + 1] != number + 1:
            parts.append(str(start) if start == number else f"{start}-{number}")
            start = None
    return ",".join(parts)


@dataclass(frozen=True)
class SatisfyingLogics:
    """Family members satisfying every law in a set."""

    law_numbers: Tuple[int, ...]
    ids: Tuple[int, ...]
    """sorted logic ids"""

    @property
    def count(self) -> int:
        """Number of satisfying logics."""
        return len(self.ids)


def _profiles(profiles: Optional[np.ndarray], config: Optional[WorkerConfig]) -> np.ndarray:
    if profiles is None:
        profiles = family_law_profiles(config)
    assert profiles.shape == (len(LogicTables.family()), NUM_BUILTIN_LAWS), "profiles cover the whole family"
    return profiles


def count_satisfying(
    law_numbers: Iterable[int], profiles: Optional[np.ndarray] = None, config: Optional[WorkerConfig] = None
) -> SatisfyingLogics:
    """Family members whose profile contains every listed law.

    Args:
        law_numbers: numbers in [1, 23].
        profiles: precomputed :func:`family_law_profiles` matrix, recomputed when omitted.
        config: worker settings used when the profiles are recomputed.
    """
    numbers = sorted(validate_law_numbers(law_numbers))
    profiles = _profiles(profiles, config)
    mask = np.all(profiles[:, [number - 1 for number in numbers]], axis=1)
    ids = LogicTables.family().ids[mask]
    return SatisfyingLogics(law_numbers=tuple(numbers), ids=tuple(int(i) for i in ids))


def count_violating(
    law_numbers: Iterable[int], profiles: Optional[np.ndarray] = None, config: Optional[WorkerConfig] = None
) -> SatisfyingLogics:
    """Family members that fail at least one listed law."""
    satisfying = count_satisfying(law_numbers, profiles, config)
    mask = ~np.isin(LogicTables.family().ids, np.array(satisfying.ids, dtype=np.int64))
    ids = LogicTables.family().ids[mask]
    return SatisfyingLogics(law_numbers=satisfying.law_numbers, ids=tuple(int(i) for i in ids))


@dataclass(frozen=True)
class StageResult:
    """Tables permitted for one connective, and those compatible with the stage's laws."""

    connective: Connective
    law_numbers: Tuple[int, ...]
    candidates: int
    compatible_tables: Tuple[Tuple[TruthValue, ...], ...]

    @property
    def compatible(self) -> int:
        """Number of compatible tables."""
        return len(self.compatible_tables)

    def as_pair(self) -> Tuple[int, int]:
        """(candidate count, compatible count)."""
        return self.candidates, self.compatible


def stage_analysis(connective: Connective, law_numbers: Iterable[int], base: Optional[LogicSpec] = None) -> StageResult:
    """Try every permitted table for one connective against a set of laws.

    Connectives earlier in :data:`STAGE_ORDER` keep the tables of ``base`` (LP by default).

    Args:
        connective: the staged connective.
        law_numbers: laws that may only mention fixed connectives and the staged one.
        base: tables of the connectives fixed before this stage.
    """
    if connective not in STAGE_ORDER:
        raise ValueError(f"Unknown connective {connective!r}, expected one of {', '.join(STAGE_ORDER)}")
    base = lp_logic() if base is None else base
    fixed = frozenset(STAGE_ORDER[: STAGE_ORDER.index(connective) + 1])
    laws = [builtin_law(number) for number in sorted(validate_law_numbers(law_numbers))]
    for law in laws:
        unfixed = (law.lhs.connectives() | law.rhs.connectives()) - fixed
        if unfixed:
            raise StagePreconditionError(law, connective, frozenset(unfixed))

    candidates = candidate_tables(connective)
    compatible = tuple(
        table for table in candidates if all(check_law(law, base.with_table(connective, table)) for law in laws)
    )
    return StageResult(
        connective=connective,
        law_numbers=tuple(law.number for law in laws),
        candidates=len(candidates),
        compatible_tables=compatible,
    )
