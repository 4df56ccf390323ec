"""
Test value-level properties of single logics and of the whole family
"""

import numpy as np

from trilogic.analysis.properties import (
    FAMILY_PROPERTIES,
    check_internalized_consistency,
    check_internalized_equivalence,
    check_paraconsistency,
    classical_containment_mask,
    designatedness_mask,
    internalized_consistency_table,
    internalized_equivalence_value,
    paraconsistency_mask,
)
from trilogic.family.enumeration import FAMILY_SIZE
from trilogic.family.logic_spec import lp_logic
from trilogic.family.tables import LogicTables
from trilogic.semantics.truth_values import TruthValue

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH
LP = lp_logic()


def test_internalized_consistency_lp():
    """The consistency formula is false exactly at b."""
    assert internalized_consistency_table(LP) == {T: T, F: T, B: F}
    assert check_internalized_consistency(LP)


def test_internalized_equivalence_lp():
    """The equivalence formula is designated exactly on the diagonal."""
    assert check_internalized_equivalence(LP)
    assert internalized_equivalence_value(LP, B, T) is F
    assert internalized_equivalence_value(LP, B, B).designated


def test_paraconsistency_lp():
    """{p, ~p} |= q is refuted at p=b, q=f."""
    result = check_paraconsistency(LP)
    assert not result.holds
    assert result.witness == {"p": B, "q": F}


def test_explosive_negation():
    """With ~b = f the explosion entailment holds."""
    explosive = LP.with_cell("neg", (B,), F)
    assert check_paraconsistency(explosive).holds
    assert not paraconsistency_mask(LogicTables.from_specs([explosive]))[0]


def test_family_properties():
    """Every family-wide property holds for all 8192 members."""
    family = LogicTables.family()
    assert len(FAMILY_PROPERTIES) == 6
    for name, mask_fn in FAMILY_PROPERTIES.items():
        assert int(np.count_nonzero(mask_fn(family))) == FAMILY_SIZE, name


def test_constraint_masks_reject_outsiders():
    """Tables outside the family fail the matching mask."""
    tables = LogicTables.from_specs(
        [LP, LP.with_cell("and", (T, T), F), LP.with_cell("imp", (T, B), F), LP.with_cell("neg", (B,), F)]
    )
    assert tables.ids.tolist() == [7418, -1, -1, -1]
    assert classical_containment_mask(tables).tolist() == [True, False, True, True]
    assert designatedness_mask(tables).tolist() == [True, True, False, False]
