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
The classical two-valued oracle.
"""

from __future__ import annotations

from typing import Iterable

from trilogic.semantics.evaluation import MissingAtomError, atoms_of
from trilogic.semantics.formulas import And, Atom, Falsum, Formula, Implies, Not, Or
from trilogic.semantics.truth_values import CLASSICAL_VALUES, TruthValue, Valuation, valuations


class ClassicalValuationError(ValueError):
    """Raised when a classical valuation assigns the value both."""


def _holds(formula: Formula, valuation: Valuation) -> bool:
    if isinstance(formula, Atom):
        if formula.name not in valuation:
            raise MissingAtomError(formula.name)
        value = valuation[formula.name]
        if not value.classical:
            raise ClassicalValuationError(f"Atom {formula.name!r} is assigned b in a classical valuation")
        return value is TruthValue.TRUE
    if isinstance(formula, Falsum):
        return False
    if isinstance(formula, Not):
        return not _holds(formula.child, valuation)
    if isinstance(formula, And):
        return _holds(formula.left, valuation) and _holds(formula.right, valuation)
    if isinstance(formula, Or):
        return _holds(formula.left, valuation) or _holds(formula.right, valuation)
    if isinstance(formula, Implies):
        return not _holds(formula.left, valuation) or _holds(formula.right, valuation)
    raise TypeError(f"Unknown formula node {type(formula).__name__}")


def classical_eval(formula: Formula, valuation: Valuation) -> TruthValue:
    """Two-valued value of a formula.

    Args:
        formula: formula to evaluate.
        valuation: assignment of t or f to the formula's atoms.
    """
    for name in formula.atoms():
        if name in valuation and not valuation[name].classical:
            raise ClassicalValuationError(f"Atom {name!r} is assigned b in a classical valuation")
    return TruthValue.TRUE if _holds(formula, valuation) else TruthValue.FALSE


def classical_entails(premises: Iterable[Formula], conclusion: Formula) -> bool:
    """Classical consequence, quantifying over two-valued valuations only."""
    premises = tuple(premises)
    for valuation in valuations(atoms_of(premises + (conclusion,)), CLASSICAL_VALUES):
        if all(_holds(premise, valuation) for premise in premises) and not _holds(conclusion, valuation):
            return False
    return True


def classical_tautology(formula: Formula) -> bool:
    """Whether the formula is true under every two-valued valuation."""
    return classical_entails((), formula)
