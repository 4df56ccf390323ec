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
Truth values, designation and valuations.
"""

from __future__ import annotations

import enum
import itertools
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple


class TruthValue(enum.Enum):
    """The three semantic values. Enumeration order is t < f < b everywhere."""

    TRUE = "t"
    FALSE = "f"
    BOTH = "b"

    @property
    def index(self) -> int:
        """Position in the value order, also the cell index used by the truth tables."""
        return _INDEX[self]

    @property
    def designated(self) -> bool:
        """Whether a valuation giving this value satisfies the formula."""
        return self is not TruthValue.FALSE

    @property
    def classical(self) -> bool:
        """Whether this is one of the two classical values."""
        return self is not TruthValue.BOTH

    @classmethod
    def from_symbol(cls, symbol: str) -> TruthValue:
        """Look a value up by its one letter symbol.

        Args:
            symbol: one of ``t``, ``f`` or ``b``.
        """
        try:
            return cls(symbol.strip())
        except ValueError as exc:
            raise ValueError(f"Unknown truth value {symbol!r}, expected one of t, f, b") from exc

    @classmethod
    def from_index(cls, index: int) -> TruthValue:
        """Inverse of :attr:`index`."""
        return VALUES[index]

    def __lt__(self, other: TruthValue) -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return self.value


VALUES: Tuple[TruthValue, ...] = (TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH)
CLASSICAL_VALUES: Tuple[TruthValue, ...] = (TruthValue.TRUE, TruthValue.FALSE)
DESIGNATED = frozenset({TruthValue.TRUE, TruthValue.BOTH})

_INDEX = {value: i for i, value in enumerate(VALUES)}

Valuation = Mapping[str, TruthValue]
"""Finite map from atom names to truth values."""


def valuations(atoms: Iterable[str], values: Sequence[TruthValue] = VALUES) -> Iterator[Dict[str, TruthValue]]:
    """Enumerate all valuations over a set of atoms in lexicographic order.

    Atoms are sorted by name and the first atom varies slowest, so the first refuting valuation
    found by a scan is the lexicographically least one.

    Args:
        atoms: atom names to assign.
        values: values each atom ranges over, in order.
    """
    names = sorted(set(atoms))
    for combination in itertools.product(values, repeat=len(names)):
        yield dict(zip(names, combination))


def format_valuation(valuation: Valuation) -> str:
    """Render a valuation as ``p=b, q=f`` with atoms sorted by name."""
    return ", ".join(f"{name}={valuation[name].value}" for name in sorted(valuation))


def parse_valuation(text: str) -> Dict[str, TruthValue]:
    """Parse ``p=t,q=b`` into a valuation. Whitespace is ignored and an empty string gives the empty valuation."""
    valuation: Dict[str, TruthValue] = {}
    for item in text.split(","):
        if not item.strip():
            continue
        name, sep, symbol = item.partition("=")
        if not sep or not name.strip():
            raise ValueError(f"Malformed assignment {item.strip()!r}, expected name=value")
        valuation[name.strip()] = TruthValue.from_symbol(symbol)
    return valuation
