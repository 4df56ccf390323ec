# Copyright 2023 The Trilogic Team. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rich tables for replication reports, schema verdicts and tautology scans."""

from __future__ import annotations

import json
from typing import Sequence

from rich import box
from rich.markup import escape
from rich.table import Table

from trilogic.analysis.replication import ReplicationReport
from trilogic.analysis.tautologies import CoincidenceScan
from trilogic.laws.axioms import SchemaVerdict
from trilogic.semantics.truth_values import format_valuation

_STATUS_STYLE = {"match": "green", "erratum": "yellow", "MISMATCH": "bold red"}


def _value(value) -> str:
    return escape(json.dumps(value))


def replication_table(report: ReplicationReport, show_witnesses: bool = True) -> Table:
    """One row per claim with published and computed values."""
    table = Table(title="Replication", title_justify="left", box=box.SIMPLE_HEAD)
    table.add_column("claim")
    table.add_column("source")
    table.add_column("expected", justify="right")
    table.add_column("computed", justify="right")
    table.add_column("status")
    for claim in report.claims:
        label = escape(claim.label)
        if claim.note:
            label += f"\n[dim]{escape(claim.note)}[/dim]"
        if show_witnesses and claim.witnesses:
            shown = ", ".join(claim.witnesses[:4]) + (" ..." if len(claim.witnesses) > 4 else "")
            label += f"\n[dim]witnesses: {escape(shown)}[/dim]"
        style = _STATUS_STYLE[claim.status]
        table.add_row(
            label,
            escape(claim.source),
            _value(claim.expected),
            _value(claim.computed),
            f"[{style}]{claim.status}[/{style}]",
        )
    return table


def verdict_table(verdicts: Sequence[SchemaVerdict], title: str) -> Table:
    """One row per schema."""
    table = Table(title=title, title_justify="left", box=box.SIMPLE_HEAD)
    table.add_column("name")
    table.add_column("schema")
    table.add_column("verdict")
    for verdict in verdicts:
        if verdict.valid:
            outcome = "[green]valid[/green]"
        else:
            outcome = f"[red]invalid[/red] at {escape(format_valuation(verdict.counterexample))} ({verdict.value})"
        table.add_row(verdict.schema.name, escape(verdict.schema.formula.to_text()), outcome)
    return table


def scan_summary(scan: CoincidenceScan) -> str:
    """One line stating the bounds and the outcome of a scan."""
    fragment = "->-free fragment" if scan.implication_free else "full language"
    return (
        f"depth <= {scan.max_depth}, {scan.num_atoms} atom(s), {fragment}: "
        f"{scan.num_functions} truth functions, {len(scan.mismatches)} mismatch(es)"
    )


def scan_table(scan: CoincidenceScan) -> Table:
    """One row per mismatching truth function."""
    table = Table(title="Tautology mismatches", title_justify="left", box=box.SIMPLE_HEAD)
    table.add_column("least formula")
    table.add_column("tautology")
    table.add_column("classical tautology")
    table.add_column("refuted at")
    for mismatch in scan.mismatches:
        table.add_row(
            escape(mismatch.formula.to_text()),
            str(mismatch.tautology),
            str(mismatch.classical_tautology),
            escape(format_valuation(mismatch.witness)),
        )
    return table
