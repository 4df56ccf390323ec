"""
Test rendering of reports as rich tables
"""

from rich.console import Console

from trilogic.analysis.replication import ReplicationClaim, ReplicationReport
from trilogic.analysis.tautologies import tautology_coincidence_scan
from trilogic.family.logic_spec import lp_logic
from trilogic.laws.axioms import check_axiom_schemas, check_collapse_schema
from trilogic.utils.reports import replication_table, scan_summary, scan_table, verdict_table


def _render(table) -> str:
    console = Console(width=200, no_color=True, highlight=False)
    with console.capture() as out:
        console.print(table)
    return out.get()


def test_replication_table():
    """Claims show their values, status and witnesses."""
    report = ReplicationReport(
        claims=(
            ReplicationClaim(key="a", label="count [x]", source="s", expected=4, computed=3, corrected=3, note="n"),
            ReplicationClaim(key="b", label="ids", source="s", expected=[1], computed=[1], witnesses=("w1", "w2")),
        )
    )
    text = _render(replication_table(report))
    assert "count [x]" in text
    assert "erratum" in text and "match" in text
    assert "witnesses: w1, w2" in text
    assert "witnesses" not in _render(replication_table(report, show_witnesses=False))


def test_verdict_table():
    """Invalid schemas show their counterexample."""
    lp = lp_logic()
    text = _render(verdict_table(check_axiom_schemas(lp) + [check_collapse_schema(lp)], "LP"))
    assert text.count("invalid") == 1
    assert "A=b, B=f" in text


def test_scan_summary():
    """The summary line states bounds and outcome; the table lists the mismatches."""
    scan = tautology_coincidence_scan(max_depth=1, num_atoms=1)
    expected = f"depth <= 1, 1 atom(s), full language: {scan.num_functions} truth functions, 0 mismatch(es)"
    assert scan_summary(scan) == expected
    deeper = tautology_coincidence_scan(max_depth=2, num_atoms=1)
    text = _render(scan_table(deeper))
    assert all(mismatch.formula.to_text() in text for mismatch in deeper.mismatches)
