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
Law schemas: named equivalences between formula templates over the metavariables A, B and C.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path
from typing import List, Mapping, Optional, Tuple

from trilogic.semantics.formulas import Formula
from trilogic.syntax.parser import FormulaSyntaxError, parse_law, parse_schema

NUM_BUILTIN_LAWS = 23


class LawFileError(ValueError):
    """Raised for a malformed line of a law file."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class LawSchema:
    """An equivalence law ``lhs == rhs`` between templates over metavariables."""

    name: str
    lhs: Formula
    rhs: Formula
    number: Optional[int] = None
    """position in the built-in catalog, if any"""
    label: str = ""
    """short description such as "annihilation"."""

    @property
    def metavariables(self) -> Tuple[str, ...]:
        """Metavariables used on either side, sorted."""
        return tuple(sorted(self.lhs.atoms() | self.rhs.atoms()))

    def instantiate(self, mapping: Mapping[str, Formula]) -> Tuple[Formula, Formula]:
        """Both sides with formulas substituted for the metavariables."""
        return self.lhs.substitute(mapping), self.rhs.substitute(mapping)

    def to_text(self) -> str:
        """The law in law-file syntax."""
        return f"{self.name}: {self.lhs.to_text()} == {self.rhs.to_text()}"

    def __str__(self) -> str:
        return self.to_text()


_BUILTIN_SOURCES = (
    ("A & F", "F", "annihilation of conjunction"),
    ("A | T", "T", "annihilation of disjunction"),
    ("A & T", "A", "identity of conjunction"),
    ("A | F", "A", "identity of disjunction"),
    ("A & A", "A", "idempotence of conjunction"),
    ("A | A", "A", "idempotence of disjunction"),
    ("A & B", "B & A", "commutativity of conjunction"),
    ("A | B", "B | A", "commutativity of disjunction"),
    ("~~A", "A", "double negation"),
    ("(A | ~A) -> B", "B", "excluded middle as antecedent"),
    ("(A -> B) & (A -> C)", "A -> (B & C)", "implication into conjunction"),
    ("(A -> C) & (B -> C)", "(A | B) -> C", "implication from disjunction"),
    ("(A & B) & C", "A & (B & C)", "associativity of conjunction"),
    ("(A | B) | C", "A | (B | C)", "associativity of disjunction"),
    ("A & (B | C)", "(A & B) | (A & C)", "distribution of conjunction over disjunction"),
    ("A | (B & C)", "(A | B) & (A | C)", "distribution of disjunction over conjunction"),
    ("~(A & B)", "~A | ~B", "de Morgan for conjunction"),
    ("~(A | B)", "~A & ~B", "de Morgan for disjunction"),
    ("~(A -> B)", "A & ~B", "negated implication"),
    ("A -> (B -> C)", "(A & B) -> C", "exportation"),
    ("A -> B", "~A | B", "material implication"),
    ("A & ~A", "F", "contradiction"),
    ("A | ~A", "T", "excluded middle"),
)


@functools.lru_cache(maxsize=None)
def _builtin_laws() -> Tuple[LawSchema, ...]:
    laws = tuple(
        LawSchema(name=f"L{number}", lhs=parse_schema(lhs), rhs=parse_schema(rhs), number=number, label=label)
        for number, (lhs, rhs, label) in enumerate(_BUILTIN_SOURCES, start=1)
    )
    assert len(laws) == NUM_BUILTIN_LAWS
    return laws


def builtin_laws() -> List[LawSchema]:
    """Laws (1)-(23) in catalog order."""
    return list(_builtin_laws())


def builtin_law(number: int) -> LawSchema:
    """Built-in law by its number in [1, 23]."""
    if not 1 <= number <= NUM_BUILTIN_LAWS:
        raise ValueError(f"Law number must be in [1, {NUM_BUILTIN_LAWS}], got {number}")
    return _builtin_laws()[number - 1]


def parse_law_line(text: str, line_number: Optional[int] = None) -> LawSchema:
    """Parse one ``NAME: LHS == RHS`` line.

    Args:
        text: the line, without comments.
        line_number: position in the source file, used in error messages.
    """
    try:
        name, lhs, rhs = parse_law(text)
    except FormulaSyntaxError as exc:
        raise LawFileError(str(exc), line_number) from exc
    return LawSchema(name=name, lhs=lhs, rhs=rhs)


def load_law_file(path: Path) -> List[LawSchema]:
    """Read user supplied laws, one per line. Blank lines and ``#`` comments are skipped."""
    laws = []
    for line_number, line in enumerate(path.read_text(encoding="UTF-8").splitlines(), start=1):
        content = line.split("#", 1)[0]
        if content.strip():
            laws.append(parse_law_line(content, line_number))
    if not laws:
        raise LawFileError(f"no laws found in {path}")
    return laws
