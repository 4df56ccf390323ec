"""
Test soundness of the axiom schemas and modus ponens
"""

import numpy as np

from trilogic.family.enumeration import FAMILY_SIZE
from trilogic.family.logic_spec import lp_logic
from trilogic.family.tables import LogicTables
from trilogic.laws.axioms import (
    axiom_schemas,
    check_axiom_schemas,
    check_collapse_schema,
    check_mp_preservation,
    mp_preservation_mask,
    mp_violation,
    schema_validity_mask,
)
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()


def test_axioms_valid_in_lp():
    """All 15 axiom schemas are valid in LP."""
    verdicts = check_axiom_schemas(LP)
    assert len(verdicts) == 15
    assert all(verdict.valid for verdict in verdicts)
    assert [verdict.schema.name for verdict in verdicts][:2] == ["Ax1", "Ax2"]


def test_collapse_schema_invalid_in_lp():
    """~A -> (A -> B) takes f at A=b, B=f."""
    verdict = check_collapse_schema(LP)
    assert not verdict.valid
    assert verdict.counterexample == {"A": B, "B": F}
    assert verdict.value is F


def test_ex_falso_valid_in_family():
    """F -> A is valid in every member."""
    ex_falso = axiom_schemas()[3]
    assert ex_falso.formula.to_text() == "F -> A"
    assert np.all(schema_validity_mask(ex_falso, LogicTables.family()))


def test_excluded_middle_valid_in_family():
    """A | ~A is valid in every member."""
    assert np.all(schema_validity_mask(axiom_schemas()[-1], LogicTables.family()))


def test_modus_ponens():
    """MP preserves designated values in LP and the whole family, and fails if b -> f is designated."""
    assert check_mp_preservation(LP)
    assert mp_violation(LP) is None
    broken = LP.with_cell("imp", (B, F), B)
    assert not check_mp_preservation(broken)
    assert mp_violation(broken) == (B, F)
    assert int(np.count_nonzero(mp_preservation_mask(LogicTables.family()))) == FAMILY_SIZE
