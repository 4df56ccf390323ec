"""
Test command-line helpers
"""

import pytest

from trilogic.family.enumeration import decode
from trilogic.family.logic_spec import lp_logic
from trilogic.utils.scripts import EXIT_USAGE, UsageError, report_error, resolve_logic


def test_resolve_logic():
    """Logics are named by 'lp' or by id."""
    assert resolve_logic("lp") == lp_logic()
    assert resolve_logic(" LP ") == lp_logic()
    assert resolve_logic("7418") == lp_logic()
    assert resolve_logic("0") == decode(0)


@pytest.mark.parametrize("name", ["8192", "-1", "classical", ""])
def test_resolve_logic_errors(name):
    """Unknown names are usage errors."""
    with pytest.raises(UsageError):
        resolve_logic(name)


def test_report_error(capsys):
    """Errors go to stderr and map to the usage exit code."""
    assert report_error("bad [input]") == EXIT_USAGE
    captured = capsys.readouterr()
    assert "bad [input]" in captured.err
    assert captured.out == ""
