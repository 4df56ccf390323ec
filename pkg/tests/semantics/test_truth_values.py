"""
Test truth values and valuations
"""

import pytest

from trilogic.semantics.truth_values import (
    CLASSICAL_VALUES,
    DESIGNATED,
    VALUES,
    TruthValue,
    format_valuation,
    parse_valuation,
    valuations,
)

T, F, B = TruthValue.TRUE, TruthValue.FALSE, TruthValue.BOTH


def test_value_order():
    """Values are ordered t < f < b and indexed accordingly."""
    assert VALUES == (T, F, B)
    assert [value.index for value in VALUES] == [0, 1, 2]
    assert sorted([B, T, F]) == [T, F, B]
    assert all(TruthValue.from_index(value.index) is value for value in VALUES)


def test_designated_values():
    """Only f is non-designated; b is the only non-classical value."""
    assert DESIGNATED == {T, B}
    assert not F.designated
    assert CLASSICAL_VALUES == (T, F)
    assert not B.classical


def test_from_symbol():
    """Symbols map to values and unknown symbols are rejected."""
    assert TruthValue.from_symbol("b") is B
    assert TruthValue.from_symbol(" t ") is T
    with pytest.raises(ValueError):
        TruthValue.from_symbol("x")


def test_valuations_lexicographic():
    """Valuations enumerate atoms sorted by name with the first atom varying slowest."""
    rows = list(valuations(["q", "p"]))
    assert len(rows) == 9
    assert rows[0] == {"p": T, "q": T}
    assert rows[1] == {"p": T, "q": F}
    assert rows[-1] == {"p": B, "q": B}
    assert list(valuations([])) == [{}]
    assert len(list(valuations(["p", "q"], CLASSICAL_VALUES))) == 4


def test_valuation_text():
    """Valuations print sorted by atom and parse back."""
    valuation = {"q": F, "p": B}
    assert format_valuation(valuation) == "p=b, q=f"
    assert parse_valuation("p=b, q=f") == valuation
    assert parse_valuation("") == {}
    with pytest.raises(ValueError):
        parse_valuation("p")
    with pytest.raises(ValueError):
        parse_valuation("p=z")
