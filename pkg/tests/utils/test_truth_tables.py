"""
Test truth table rows and rendering
"""

import pytest

from trilogic.family.logic_spec import lp_logic
from trilogic.semantics.truth_values import TruthValue
from trilogic.syntax.parser import parse_formula
from trilogic.utils.truth_tables import TruthTableSizeError, render_truth_table, truth_table_rows

LP = lp_logic()


def test_rows():
    """Rows follow valuation order with the evaluated value."""
    rows = truth_table_rows(parse_formula("p -> q"), LP)
    assert len(rows) == 9
    assert rows[0].valuation == {"p": TruthValue.TRUE, "q": TruthValue.TRUE}
    assert [row.value.value for row in rows] == list("tfbttttfb")


def test_rows_without_atoms():
    """A closed formula has a single row."""
    rows = truth_table_rows(parse_formula("~F"), LP)
    assert len(rows) == 1
    assert rows[0].valuation == {}
    assert rows[0].value is TruthValue.TRUE


def test_render():
    """Header shows the formula; designated results are starred."""
    text = render_truth_table(parse_formula("p -> q"), LP)
    assert "p -> q" in text
    assert text.count("*") == 7


def test_too_many_atoms():
    """Tables are limited to four atoms."""
    with pytest.raises(TruthTableSizeError):
        truth_table_rows(parse_formula("p & q & r & s & t"), LP)
