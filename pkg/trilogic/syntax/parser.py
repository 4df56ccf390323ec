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
Concrete syntax for formulas and law schemas.

Grammar, loosest binding first: ``<->`` (right associative, expands to a conjunction of implications),
``->`` (right associative), ``|``, ``&``, ``~``. Atoms match ``[a-z][a-zA-Z0-9_]*``; ``F`` is falsum and
``T`` abbreviates ``~F``. Law schemas use the metavariables ``A``, ``B`` and ``C`` instead of atoms.
"""

from __future__ import annotations

import functools
from typing import FrozenSet, Optional, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from trilogic.semantics.formulas import And, Atom, Falsum, Formula, Implies, Not, Or, iff, verum

_GRAMMAR = r"""
?start: biconditional

law: LAW_NAME ":" biconditional "==" biconditional

?biconditional: implication
              | implication "<->" biconditional -> iff

?implication: disjunction
            | disjunction "->" implication -> implies

?disjunction: conjunction
            | disjunction "|" conjunction -> disj

?conjunction: negation
            | conjunction "&" negation -> conj

?negation: "~" negation -> neg
         | primary

?primary: VARIABLE -> variable
        | "F" -> falsum
        | "T" -> verum
        | "(" biconditional ")"

LAW_NAME: /[A-Za-z_][A-Za-z0-9_\-]*/

%import common.WS
%ignore WS
"""

_ATOM_TERMINAL = r"VARIABLE: /[a-z][a-zA-Z0-9_]*/"
_METAVARIABLE_TERMINAL = r'VARIABLE: "A" | "B" | "C"'

METAVARIABLES = ("A", "B", "C")

_READABLE_TERMINALS = {"$END": "end of input", "VARIABLE": "variable", "LAW_NAME": "law name"}


class FormulaSyntaxError(ValueError):
    """Raised for text that is not a well formed formula.

    Attributes:
        text: the rejected input.
        position: zero based character offset of the error.
        expected: tokens that would have been accepted at that position.
    """

    def __init__(self, text: str, position: int, expected: FrozenSet[str], found: Optional[str] = None):
        self.text = text
        self.position = position
        self.expected = expected
        self.found = found
        what = "end of input" if found is None else repr(found)
        super().__init__(
            f"Unexpected {what} at position {position} in {text!r}; expected one of: {', '.join(sorted(expected))}"
        )


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    """Turns the parse tree into formula nodes."""

    def variable(self, token):
        return Atom(str(token))

    def falsum(self):
        return Falsum()

    def verum(self):
        return verum()

    def neg(self, child):
        return Not(child)

    def conj(self, left, right):
        return And(left, right)

    def disj(self, left, right):
        return Or(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def iff(self, left, right):
        return iff(left, right)

    def law(self, name, lhs, rhs):
        return str(name), lhs, rhs


@functools.lru_cache(maxsize=None)
def _parser(metavariables: bool) -> Lark:
    terminal = _METAVARIABLE_TERMINAL if metavariables else _ATOM_TERMINAL
    return Lark(
        _GRAMMAR + terminal + "\n",
        parser="lalr",
        transformer=_FormulaBuilder(),
        maybe_placeholders=False,
        start=["start", "law"],
    )


def _readable(parser: Lark, name: str) -> str:
    if name in _READABLE_TERMINALS:
        return _READABLE_TERMINALS[name]
    try:
        return repr(parser.get_terminal(name).pattern.value)
    except KeyError:
        return name


def _parse(text: str, metavariables: bool, start: str = "start"):
    parser = _parser(metavariables)
    try:
        return parser.parse(text, start=start)
    except UnexpectedInput as exc:
        if isinstance(exc, UnexpectedEOF):
            position, names, found = len(text), exc.expected, None
        elif isinstance(exc, UnexpectedToken):
            names = exc.expected
            found = None if exc.token.type == "$END" else str(exc.token)
            position = len(text) if found is None else exc.pos_in_stream
        elif isinstance(exc, UnexpectedCharacters):
            position, names, found = exc.pos_in_stream, exc.allowed or (), text[exc.pos_in_stream]
        else:
            raise
        raise FormulaSyntaxError(text, position, frozenset(_readable(parser, name) for name in names), found) from None


def parse_formula(text: str) -> Formula:
    """Parse a formula over lowercase atoms.

    Examples:
        ``p & ~p -> q`` gives ``Implies(And(p, Not(p)), q)`` and ``a <-> b`` gives
        ``And(Implies(a, b), Implies(b, a))``.
    """
    return _parse(text, metavariables=False)


def parse_schema(text: str) -> Formula:
    """Parse a formula template over the metavariables A, B and C."""
    return _parse(text, metavariables=True)


def parse_law(text: str) -> Tuple[str, Formula, Formula]:
    """Parse a ``NAME: LHS == RHS`` law over the metavariables A, B and C into its name and two sides.

    Error positions are offsets into the whole line.
    """
    return _parse(text, metavariables=True, start="law")
