"""
Test the two-valued oracle
"""

import pytest

from trilogic.semantics.classical import (
    ClassicalValuationError,
    classical_entails,
    classical_eval,
    classical_tautology,
)
from trilogic.semantics.evaluation import MissingAtomError
from trilogic.semantics.truth_values import TruthValue
from trilogic.syntax.parser import parse_formula

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH


def test_classical_eval():
    """Two-valued evaluation of the primitive connectives."""
    assert classical_eval(parse_formula("p -> q"), {"p": T, "q": F}) is F
    assert classical_eval(parse_formula("~p | q"), {"p": F, "q": F}) is T
    assert classical_eval(parse_formula("T"), {}) is T


def test_classical_rejects_both():
    """The value b has no classical meaning."""
    with pytest.raises(ClassicalValuationError):
        classical_eval(parse_formula("p"), {"p": B})
    with pytest.raises(MissingAtomError):
        classical_eval(parse_formula("p & q"), {"p": T})


def test_classical_consequence():
    """Explosion holds classically; the collapse schema instance is a tautology."""
    assert classical_entails([parse_formula("p"), parse_formula("~p")], parse_formula("q"))
    assert not classical_entails([parse_formula("p | q")], parse_formula("p"))
    assert classical_tautology(parse_formula("~p -> (p -> F)"))
    assert not classical_tautology(parse_formula("p -> q"))
