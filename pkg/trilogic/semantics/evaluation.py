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
Evaluation of formulas under a logic, and the consequence, equivalence and consistency relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional

from trilogic.family.logic_spec import LogicSpec
from trilogic.semantics.formulas import And, Atom, Falsum, Formula, Implies, Not, Or
from trilogic.semantics.truth_values import TruthValue, Valuation, valuations


class MissingAtomError(KeyError):
    """Raised when a valuation does not cover an atom of the evaluated formula."""

    def __init__(self, atom: str):
        super().__init__(atom)
        self.atom = atom

    def __str__(self) -> str:
        return f"Valuation does not assign a value to atom {self.atom!r}"


def evaluate(formula: Formula, valuation: Valuation, logic: LogicSpec) -> TruthValue:
    """Value of a formula under a valuation, applying the logic's tables bottom up.

    Args:
        formula: formula to evaluate.
        valuation: values of (at least) the formula's atoms.
        logic: truth tables to apply.
    """
    if isinstance(formula, Atom):
        if formula.name not in valuation:
            raise MissingAtomError(formula.name)
        return valuation[formula.name]
    if isinstance(formula, Falsum):
        return TruthValue.FALSE
    if isinstance(formula, Not):
        return logic.neg(evaluate(formula.child, valuation, logic))
    if isinstance(formula, And):
        return logic.and_(evaluate(formula.left, valuation, logic), evaluate(formula.right, valuation, logic))
    if isinstance(formula, Or):
        return logic.or_(evaluate(formula.left, valuation, logic), evaluate(formula.right, valuation, logic))
    if isinstance(formula, Implies):
        return logic.imp(evaluate(formula.left, valuation, logic), evaluate(formula.right, valuation, logic))
    raise TypeError(f"Unknown formula node {type(formula).__name__}")


@dataclass(frozen=True)
class EntailmentResult:
    """Outcome of a consequence check. The witness is present exactly when the entailment fails."""

    holds: bool
    witness: Optional[Dict[str, TruthValue]] = None

    def __post_init__(self):
        assert self.holds == (self.witness is None), "a witness is required iff the relation fails"

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class EquivalenceResult(EntailmentResult):
    """Outcome of an equivalence check, with both sides' values at the witness."""

    left: Optional[TruthValue] = None
    right: Optional[TruthValue] = None


def atoms_of(formulas: Iterable[Formula]) -> FrozenSet[str]:
    """Union of the atoms of several formulas."""
    names: FrozenSet[str] = frozenset()
    for formula in formulas:
        names |= formula.atoms()
    return names


def entails(premises: Iterable[Formula], conclusion: Formula, logic: LogicSpec) -> EntailmentResult:
    """Decide whether the premises entail the conclusion.

    The entailment holds iff every valuation either makes some premise false or gives the
    conclusion a designated value. Valuations range over the atoms of premises and conclusion.

    Args:
        premises: finite set of premises.
        conclusion: formula to derive.
        logic: truth tables to evaluate with.

    Returns:
        The verdict, with the lexicographically least refuting valuation when it fails.
    """
    premises = tuple(premises)
    for valuation in valuations(atoms_of(premises + (conclusion,))):
        if any(evaluate(premise, valuation, logic) is TruthValue.FALSE for premise in premises):
            continue
        if not evaluate(conclusion, valuation, logic).designated:
            return EntailmentResult(holds=False, witness=valuation)
    return EntailmentResult(holds=True)


def equivalent(a: Formula, b: Formula, logic: LogicSpec) -> EquivalenceResult:
    """Decide logical equivalence: identical values under every valuation.

    Args:
        a: left formula.
        b: right formula.
        logic: truth tables to evaluate with.
    """
    for valuation in valuations(a.atoms() | b.atoms()):
        left, right = evaluate(a, valuation, logic), evaluate(b, valuation, logic)
        if left is not right:
            return EquivalenceResult(holds=False, witness=valuation, left=left, right=right)
    return EquivalenceResult(holds=True)


def is_consistent(formula: Formula, logic: LogicSpec) -> bool:
    """Whether no valuation gives the formula the value both."""
    return all(evaluate(formula, valuation, logic) is not TruthValue.BOTH for valuation in valuations(formula.atoms()))


def is_valid(formula: Formula, logic: LogicSpec) -> bool:
    """Whether the formula is designated under every valuation."""
    return entails((), formula, logic).holds
