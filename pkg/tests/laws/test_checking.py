"""
Test law checking, counterexamples and profiles
"""

import hypothesis.strategies as st
import numpy as np
from hypothesis import given, settings

from trilogic.configs.base_config import WorkerConfig
from trilogic.family.enumeration import FAMILY_SIZE, decode
from trilogic.family.logic_spec import lp_logic
from trilogic.family.tables import LogicTables
from trilogic.laws.checking import (
    LawProfile,
    check_law,
    check_law_classically,
    counterexample,
    family_law_profiles,
    law_profile,
)
from trilogic.laws.schemas import builtin_law, builtin_laws, parse_law_line
from trilogic.semantics.evaluation import equivalent, evaluate
from trilogic.semantics.formulas import And, Atom, Falsum, Implies, Not, Or
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()
LP_PROFILE = "111111111111111111" + "0" + "1" + "000"

formulas = st.recursive(
    st.one_of(st.sampled_from([Atom("p"), Atom("q")]), st.just(Falsum())),
    lambda children: st.one_of(
        children.map(Not),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    ),
    max_leaves=4,
)


def test_lp_laws():
    """LP satisfies laws (1)-(12) and fails (21)-(23)."""
    assert all(check_law(builtin_law(n), LP) for n in range(1, 13))
    assert not any(check_law(builtin_law(n), LP) for n in (21, 22, 23))


def test_lp_counterexamples():
    """Least counterexamples with both side values."""
    assert counterexample(builtin_law(1), LP) is None
    example = counterexample(builtin_law(21), LP)
    assert dict(example.assignment) == {"A": B, "B": F}
    assert (example.lhs, example.rhs) == (F, B)
    example = counterexample(builtin_law(22), LP)
    assert dict(example.assignment) == {"A": B}
    assert (example.lhs, example.rhs) == (B, F)
    example = counterexample(builtin_law(23), LP)
    assert dict(example.assignment) == {"A": B}
    assert (example.lhs, example.rhs) == (B, T)
    assert str(example) == "A=b: lhs=b, rhs=t"


def test_negated_implication_fails_in_lp():
    """~(A -> B) and A & ~B differ at A=b, B=f."""
    example = counterexample(builtin_law(19), LP)
    assert dict(example.assignment) == {"A": B, "B": F}
    assert (example.lhs, example.rhs) == (T, B)


def test_double_negation_needs_negation_of_b():
    """Law (9) fails whenever ~b = t."""
    logic = LP.with_cell("neg", (B,), T)
    assert not check_law(builtin_law(9), logic)
    assert check_law(builtin_law(9), LP)


def test_conjunction_idempotence():
    """Law (5) fails whenever b & b = t."""
    assert not check_law(builtin_law(5), LP.with_cell("and", (B, B), T))


def test_lp_profile():
    """Profile of LP: laws (1)-(18) and (20) hold."""
    profile = law_profile(LP)
    assert profile.bits == LP_PROFILE
    assert profile.failed() == [19, 21, 22, 23]
    assert profile.holds(20) and not profile.holds(19)
    assert LawProfile.from_bits(profile.bits) == profile


def test_classical_laws():
    """Every built-in law holds under two-valued evaluation."""
    assert all(check_law_classically(law) for law in builtin_laws())
    assert not check_law_classically(parse_law_line("x: A & B == A"))


def test_family_profiles():
    """Batched profiles agree with per-logic profiles and with any thread count."""
    profiles = family_law_profiles(WorkerConfig(num_threads=1, chunk_size=4096))
    assert profiles.shape == (FAMILY_SIZE, 23)
    assert np.all(profiles[:, 0])
    assert "".join("1" if bit else "0" for bit in profiles[7418]) == LP_PROFILE
    for logic_id in (0, 123, 4096, 8191):
        assert tuple(bool(bit) for bit in profiles[logic_id]) == law_profile(decode(logic_id)).satisfied

    threaded = family_law_profiles(WorkerConfig(num_threads=3, chunk_size=1000))
    assert np.array_equal(profiles, threaded)


def test_profiles_of_a_batch():
    """Profiles can be restricted to a batch of logics and a list of laws."""
    chunks = []
    tables = LogicTables.from_ids([7418, 0])
    profiles = family_law_profiles(
        WorkerConfig(num_threads=1, chunk_size=1), laws=[builtin_law(9)], tables=tables, on_chunk=chunks.append
    )
    assert profiles.tolist() == [[True], [False]]
    assert chunks == [1, 1]


@given(st.integers(min_value=1, max_value=23), st.integers(min_value=0, max_value=FAMILY_SIZE - 1), st.data())
@settings(max_examples=500, deadline=None)
def test_value_reduction_agrees_with_substitution(number, logic_id, data):
    """A law holding by value assignment holds for every instance; a counterexample yields a refuted instance."""
    law = builtin_law(number)
    logic = decode(logic_id)
    mapping = {name: data.draw(formulas) for name in law.metavariables}
    lhs, rhs = law.instantiate(mapping)
    if check_law(law, logic):
        assert equivalent(lhs, rhs, logic).holds
    else:
        example = counterexample(law, logic)
        assert evaluate(law.lhs, example.assignment, logic) is example.lhs
        assert evaluate(law.rhs, example.assignment, logic) is example.rhs
        # atoms instantiated by atoms reproduce the counterexample
        atoms = {name: Atom(name.lower()) for name in law.metavariables}
        atom_lhs, atom_rhs = law.instantiate(atoms)
        assert not equivalent(atom_lhs, atom_rhs, logic).holds
