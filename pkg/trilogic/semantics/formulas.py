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
Formula syntax trees over atoms, falsum, negation, conjunction, disjunction and implication.

Truth and bi-implication are abbreviations and never appear as nodes: ``T`` is ``~F`` and
``A <-> B`` is ``(A -> B) & (B -> A)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Mapping, Tuple

from typing_extensions import Literal

Connective = Literal["neg", "and", "or", "imp"]
CONNECTIVES: Tuple[Connective, ...] = ("neg", "and", "or", "imp")

# binding strength used when printing; leaves bind tightest
_LEAF_PRECEDENCE = 5
_SYMBOLS = {"and": "&", "or": "|", "imp": "->"}


class Formula:
    """Base class of all formula nodes. Nodes are frozen dataclasses and compare structurally."""

    rank: int = -1
    """constructor order used for enumeration: Atom < F < ~ < & < | < ->"""
    precedence: int = _LEAF_PRECEDENCE

    def children(self) -> Tuple[Formula, ...]:
        """Immediate subformulas, left to right."""
        return ()

    def atoms(self) -> FrozenSet[str]:
        """Names of all atoms occurring in the formula."""
        names: FrozenSet[str] = frozenset()
        for child in self.children():
            names |= child.atoms()
        return names

    @property
    def size(self) -> int:
        """Number of nodes."""
        return 1 + sum(child.size for child in self.children())

    @property
    def depth(self) -> int:
        """Connective nesting height; atoms and falsum have depth 0."""
        children = self.children()
        if not children:
            return 0
        return 1 + max(child.depth for child in children)

    def connectives(self) -> FrozenSet[Connective]:
        """Connectives used by the formula. ``~F`` is the truth constant and does not count as a negation."""
        used: FrozenSet[Connective] = frozenset()
        for child in self.children():
            used |= child.connectives()
        return used

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        """Replace atoms by formulas. Atoms missing from the mapping are kept."""
        raise NotImplementedError

    def sort_key(self) -> tuple:
        """Key ordering formulas by size, then constructor order, then children left to right."""
        return (self.size, self.rank) + tuple(child.sort_key() for child in self.children())

    def to_text(self) -> str:
        """Concrete syntax accepted by the parser, with the fewest parentheses needed."""
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


def _wrap(formula: Formula, parenthesize: bool) -> str:
    text = formula.to_text()
    return f"({text})" if parenthesize else text


@dataclass(frozen=True)
class Atom(Formula):
    """Propositional variable. Law schemas use the metavariables A, B and C as atoms."""

    name: str
    rank = 0

    def atoms(self) -> FrozenSet[str]:
        return frozenset({self.name})

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return mapping.get(self.name, self)

    def sort_key(self) -> tuple:
        return (1, self.rank, self.name)

    def to_text(self) -> str:
        return self.name


@dataclass(frozen=True)
class Falsum(Formula):
    """The falsity constant F."""

    rank = 1

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return self

    def to_text(self) -> str:
        return "F"


@dataclass(frozen=True)
class Not(Formula):
    """Negation."""

    child: Formula
    rank = 2
    precedence = 4

    def children(self) -> Tuple[Formula, ...]:
        return (self.child,)

    def connectives(self) -> FrozenSet[Connective]:
        if isinstance(self.child, Falsum):
            return frozenset()
        return frozenset({"neg"}) | self.child.connectives()

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return Not(self.child.substitute(mapping))

    def to_text(self) -> str:
        return "~" + _wrap(self.child, self.child.precedence < self.precedence)


@dataclass(frozen=True)
class BinaryFormula(Formula):
    """Shared behaviour of the three binary connectives."""

    left: Formula
    right: Formula
    connective = "and"

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)

    def connectives(self) -> FrozenSet[Connective]:
        return frozenset({self.connective}) | self.left.connectives() | self.right.connectives()

    def substitute(self, mapping: Mapping[str, Formula]) -> Formula:
        return type(self)(self.left.substitute(mapping), self.right.substitute(mapping))

    def to_text(self) -> str:
        if self.connective == "imp":
            # right associative
            left = _wrap(self.left, self.left.precedence <= self.precedence)
            right = _wrap(self.right, self.right.precedence < self.precedence)
        else:
            left = _wrap(self.left, self.left.precedence < self.precedence)
            right = _wrap(self.right, self.right.precedence <= self.precedence)
        return f"{left} {_SYMBOLS[self.connective]} {right}"


@dataclass(frozen=True)
class And(BinaryFormula):
    """Conjunction."""

    rank = 3
    precedence = 3
    connective = "and"


@dataclass(frozen=True)
class Or(BinaryFormula):
    """Disjunction."""

    rank = 4
    precedence = 2
    connective = "or"


@dataclass(frozen=True)
class Implies(BinaryFormula):
    """Implication."""

    rank = 5
    precedence = 1
    connective = "imp"


def verum() -> Formula:
    """The truth constant T, i.e. ``~F``."""
    return Not(Falsum())


def iff(left: Formula, right: Formula) -> Formula:
    """Bi-implication ``(left -> right) & (right -> left)``."""
    return And(Implies(left, right), Implies(right, left))
