"""
Test the LP(->,F) tables and table accessors
"""

import pytest

from trilogic.family.logic_spec import cell_offset, cells, classical_value, lp_logic
from trilogic.family.logic_spec import LogicSpec
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()


def test_lp_tables():
    """LP tables in row-major order t, f, b."""
    assert LP.to_strings() == {
        "neg": "ftb",
        "and": "tfbfffbfb",
        "or": "ttttfbtbb",
        "imp": "tfbttttfb",
    }


def test_lp_cells():
    """Selected cells of LP."""
    assert LP.neg(B) is B
    assert LP.imp(B, T) is T
    assert LP.imp(F, B) is T
    assert LP.imp(B, F) is F
    assert LP.or_(B, F) is B
    assert LP.and_(T, B) is B


def test_cell_layout():
    """Cells are enumerated row-major and offsets follow."""
    assert cells("neg") == ((T,), (F,), (B,))
    assert len(cells("and")) == 9
    assert [cell_offset(cell) for cell in cells("imp")] == list(range(9))
    assert classical_value("imp", (T, F)) is F


def test_strings_roundtrip():
    """Tables survive conversion to symbol strings."""
    strings = LP.to_strings()
    assert LogicSpec.from_strings(strings["neg"], strings["and"], strings["or"], strings["imp"]) == LP
    with pytest.raises(ValueError):
        LogicSpec.from_strings("ft", strings["and"], strings["or"], strings["imp"])


def test_with_cell():
    """Replacing a cell leaves the original untouched."""
    changed = LP.with_cell("neg", (B,), T)
    assert changed.neg(B) is T
    assert LP.neg(B) is B
    assert changed.with_table("neg", LP.table("neg")) == LP
