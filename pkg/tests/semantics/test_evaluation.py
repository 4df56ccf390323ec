"""
Test evaluation, consequence and equivalence under LP(->,F) and the rest of the family
"""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from trilogic.family.enumeration import FAMILY_SIZE, decode
from trilogic.family.logic_spec import lp_logic
from trilogic.semantics.evaluation import (
    MissingAtomError,
    entails,
    equivalent,
    evaluate,
    is_consistent,
    is_valid,
)
from trilogic.semantics.formulas import And, Atom, Falsum, Implies, Not, Or
from trilogic.semantics.truth_values import TruthValue
from trilogic.syntax.parser import parse_formula

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()

formulas = st.recursive(
    st.one_of(st.sampled_from([Atom("p"), Atom("q"), Atom("r")]), st.just(Falsum())),
    lambda children: st.one_of(
        children.map(Not),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    ),
    max_leaves=6,
)


def test_evaluate_examples():
    """Evaluation applies the LP tables."""
    assert evaluate(parse_formula("~p"), {"p": B}, LP) is B
    assert evaluate(parse_formula("p -> q"), {"p": F, "q": B}, LP) is T
    assert evaluate(parse_formula("p & F"), {"p": B}, LP) is F
    assert evaluate(Falsum(), {}, LP) is F


def test_evaluate_missing_atom():
    """A valuation must cover every atom."""
    with pytest.raises(MissingAtomError) as excinfo:
        evaluate(parse_formula("p | q"), {"p": T}, LP)
    assert excinfo.value.atom == "q"


def test_entailment_examples():
    """Explosion fails, excluded middle and identity hold."""
    result = entails([parse_formula("p"), parse_formula("~p")], parse_formula("q"), LP)
    assert not result.holds
    assert result.witness == {"p": B, "q": F}
    assert entails([], parse_formula("p | ~p"), LP).holds
    assert entails([parse_formula("p")], parse_formula("p"), LP).holds
    assert is_valid(parse_formula("p | ~p"), LP)


def test_equivalence_examples():
    """Material implication differs from ->; conjunction commutes."""
    assert equivalent(parse_formula("p & q"), parse_formula("q & p"), LP).holds
    result = equivalent(parse_formula("p -> q"), parse_formula("~p | q"), LP)
    assert not result.holds
    assert result.witness == {"p": B, "q": F}
    assert (result.left, result.right) == (F, B)
    assert equivalent(Atom("p"), Atom("p"), LP)


def test_consistency():
    """Only formulas that can take b are inconsistent."""
    assert not is_consistent(parse_formula("p"), LP)
    assert is_consistent(Falsum(), LP)
    assert is_consistent(parse_formula("(p -> F) | (~p -> F)"), LP)


logic_ids = st.integers(min_value=0, max_value=FAMILY_SIZE - 1)


@given(logic_ids, formulas, formulas, formulas)
@settings(max_examples=200, deadline=None)
def test_monotonicity(logic_id, premise, extra, conclusion):
    """Adding a premise never destroys an entailment, in any member of the family."""
    logic = decode(logic_id)
    if entails([premise], conclusion, logic).holds:
        assert entails([premise, extra], conclusion, logic).holds


@given(logic_ids, st.lists(formulas, max_size=3), formulas)
@settings(max_examples=500, deadline=None)
def test_entailment_witness_sound(logic_id, premises, conclusion):
    """A refuting witness makes every premise designated and the conclusion false."""
    logic = decode(logic_id)
    result = entails(premises, conclusion, logic)
    if not result.holds:
        assert all(evaluate(premise, result.witness, logic).designated for premise in premises)
        assert evaluate(conclusion, result.witness, logic) is F


@given(logic_ids, formulas, formulas)
@settings(max_examples=500, deadline=None)
def test_equivalence_witness_sound(logic_id, left, right):
    """A distinguishing witness reproduces the two recorded values."""
    logic = decode(logic_id)
    result = equivalent(left, right, logic)
    if result.holds:
        assert equivalent(right, left, logic).holds
    else:
        assert evaluate(left, result.witness, logic) is result.left
        assert evaluate(right, result.witness, logic) is result.right
        assert result.left is not result.right


@given(logic_ids, formulas, formulas, formulas)
@settings(max_examples=200, deadline=None)
def test_equivalence_is_an_equivalence_relation(logic_id, a, b, c):
    """Reflexive, symmetric and transitive."""
    logic = decode(logic_id)
    assert equivalent(a, a, logic).holds
    assert equivalent(a, b, logic).holds == equivalent(b, a, logic).holds
    if equivalent(a, b, logic).holds and equivalent(b, c, logic).holds:
        assert equivalent(a, c, logic).holds


@given(logic_ids, st.lists(formulas, max_size=2), formulas, formulas, formulas)
@settings(max_examples=200, deadline=None)
def test_connective_consequence_rules(logic_id, context, a, b, c):
    """Implication, conjunction and disjunction behave as their designatedness conditions demand."""
    logic = decode(logic_id)
    assert entails(context + [a], b, logic).holds == entails(context, Implies(a, b), logic).holds
    assert entails(context, And(a, b), logic).holds == (
        entails(context, a, logic).holds and entails(context, b, logic).holds
    )
    assert entails(context + [Or(a, b)], c, logic).holds == (
        entails(context + [a], c, logic).holds and entails(context + [b], c, logic).holds
    )
