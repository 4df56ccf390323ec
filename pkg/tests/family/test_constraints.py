"""
Test the family constraints
"""

from trilogic.family.constraints import allowed_values, satisfies_family_constraints
from trilogic.family.logic_spec import lp_logic
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()


def test_lp_is_member():
    """LP satisfies every constraint."""
    report = satisfies_family_constraints(LP)
    assert report.ok
    assert report
    assert report.violation is None


def test_conjunction_designatedness():
    """A conjunction of designated values must be designated."""
    report = satisfies_family_constraints(LP.with_cell("and", (B, B), F))
    assert not report.ok
    assert report.violation.connective == "and"
    assert report.violation.cell == (B, B)
    assert report.violation.value is F


def test_implication_deduction_condition():
    """imp(t, b) must be designated."""
    report = satisfies_family_constraints(LP.with_cell("imp", (T, B), F))
    assert not report
    assert report.violation.connective == "imp"
    assert report.violation.cell == (T, B)


def test_classical_restriction():
    """Cells with classical arguments are fixed to the classical table."""
    report = satisfies_family_constraints(LP.with_cell("or", (F, F), T))
    assert report.violation.connective == "or"
    assert "classical" in report.violation.constraint


def test_allowed_values():
    """Free cells allow t and b; forced cells allow one value."""
    assert allowed_values("neg", (B,)) == {T, B}
    assert allowed_values("imp", (B, F)) == {F}
    assert allowed_values("and", (F, B)) == {F}
    assert allowed_values("or", (B, F)) == {T, B}
    assert allowed_values("and", (T, F)) == {F}
