"""
Command line workbench for the three-valued paraconsistent logics of the family.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import tyro
from rich.console import Console
from rich.markup import escape
from typing_extensions import Annotated, Literal

from trilogic.analysis.counting import count_satisfying, count_violating, format_law_numbers, parse_law_numbers
from trilogic.analysis.replication import replicate_report
from trilogic.analysis.tautologies import scan_from_config
from trilogic.configs.base_config import ProfilerConfig, ScanConfig, WorkerConfig
from trilogic.exporter.catalog import export_catalog, load_catalog, verify_catalog
from trilogic.family.enumeration import encode
from trilogic.laws.axioms import check_axiom_schemas, check_collapse_schema, mp_violation
from trilogic.laws.checking import counterexample, family_law_profiles
from trilogic.laws.schemas import LawSchema, builtin_law, load_law_file
from trilogic.semantics.evaluation import entails, equivalent, evaluate
from trilogic.semantics.truth_values import format_valuation, parse_valuation
from trilogic.syntax.parser import parse_formula
from trilogic.utils import io
from trilogic.utils.profiler import flush_profiler, setup_profiler
from trilogic.utils.reports import replication_table, scan_summary, scan_table, verdict_table
from trilogic.utils.rich_utils import status
from trilogic.utils.scripts import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, UsageError, report_error, resolve_logic
from trilogic.utils.truth_tables import truth_table

CONSOLE = Console(width=120)
ERR_CONSOLE = Console(width=120, stderr=True)


def _describe(logic_name: str) -> str:
    if logic_name.strip().lower() == "lp":
        return "LP(->,F)"
    return f"logic {encode(resolve_logic(logic_name))}"


@dataclass
class Eval:
    """Evaluate a formula under a valuation."""

    formula: tyro.conf.Positional[str]
    """formula, e.g. 'p -> q'"""
    assign: str = ""
    """valuation such as 'p=t,q=b'"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print the value."""
        logic = resolve_logic(self.logic)
        value = evaluate(parse_formula(self.formula), parse_valuation(self.assign), logic)
        CONSOLE.print(str(value), highlight=False)
        return EXIT_OK


@dataclass
class Entails:
    """Decide whether premises entail a conclusion; exits 2 when refuted."""

    conclusion: tyro.conf.Positional[str]
    """formula to derive"""
    premises: str = ""
    """premises separated by ';', e.g. 'p; ~p'"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print the verdict and the least refuting valuation."""
        logic = resolve_logic(self.logic)
        premises = [parse_formula(text) for text in self.premises.split(";") if text.strip()]
        result = entails(premises, parse_formula(self.conclusion), logic)
        if result.holds:
            CONSOLE.print("holds", highlight=False)
            return EXIT_OK
        CONSOLE.print(f"refuted at {format_valuation(result.witness)}", highlight=False)
        return EXIT_REFUTED


@dataclass
class Equiv:
    """Decide whether two formulas are logically equivalent; exits 2 when they are not."""

    formulas: tyro.conf.Positional[Tuple[str, str]]
    """the two formulas"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print the verdict and the least distinguishing valuation."""
        logic = resolve_logic(self.logic)
        left, right = (parse_formula(text) for text in self.formulas)
        result = equivalent(left, right, logic)
        if result.holds:
            CONSOLE.print("equivalent", highlight=False)
            return EXIT_OK
        CONSOLE.print(
            f"not equivalent at {format_valuation(result.witness)}: left={result.left}, right={result.right}",
            highlight=False,
        )
        return EXIT_REFUTED


@dataclass
class CheckLaw:
    """Check built-in or user supplied laws against a logic; exits 2 when some law fails."""

    law: Optional[str] = None
    """built-in law numbers, e.g. '19' or '1-8,10-12'"""
    law_file: Optional[Path] = None
    """file of 'NAME: LHS == RHS' lines"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def _laws(self) -> List[LawSchema]:
        if (self.law is None) == (self.law_file is None):
            raise UsageError("give exactly one of --law and --law-file")
        if self.law_file is not None:
            if not self.law_file.exists():
                raise UsageError(f"law file {self.law_file} does not exist")
            return load_law_file(self.law_file)
        return [builtin_law(number) for number in sorted(parse_law_numbers(self.law))]

    def main(self) -> int:
        """Print one verdict per law."""
        logic = resolve_logic(self.logic)
        all_hold = True
        for law in self._laws():
            example = counterexample(law, logic)
            if example is None:
                CONSOLE.print(f"{law.name} holds", highlight=False)
            else:
                all_hold = False
                CONSOLE.print(f"{law.name} fails at {example}", highlight=False)
        return EXIT_OK if all_hold else EXIT_REFUTED


@dataclass
class Enumerate:
    """List the logics of the family that satisfy a set of built-in laws."""

    satisfying: str = "1-12"
    """law numbers, e.g. '1-8,10-12'"""
    violating: bool = False
    """list the logics failing some of the laws instead"""

    def main(self) -> int:
        """Print matching ids, one per line, then the count."""
        numbers = parse_law_numbers(self.satisfying)
        with status("[bold yellow]Profiling the family...", console=ERR_CONSOLE):
            profiles = family_law_profiles(WorkerConfig())
        found = (count_violating if self.violating else count_satisfying)(numbers, profiles)
        for logic_id in found.ids:
            CONSOLE.print(str(logic_id), highlight=False)
        relation = "failing some of" if self.violating else "satisfying"
        CONSOLE.print(f"{found.count} logics {relation} laws {format_law_numbers(numbers)}", highlight=False)
        return EXIT_OK


@dataclass
class CatalogExport:
    """Write the catalog of all 8192 logics."""

    out: Path = Path("catalog.jsonl")
    """output file"""
    format: Optional[Literal["jsonl", "csv"]] = None
    """catalog format; inferred from the suffix of --out when omitted"""

    def main(self) -> int:
        """Export and report the record count."""
        count = export_catalog(
            self.out, self.format, WorkerConfig(), show_progress=ERR_CONSOLE.is_terminal, console=ERR_CONSOLE
        )
        CONSOLE.print(f"wrote {count} records to {escape(str(self.out))}", highlight=False)
        return EXIT_OK


@dataclass
class CatalogVerify:
    """Import a catalog and re-validate every record; exits 2 when a problem is found."""

    path: tyro.conf.Positional[Path]
    """catalog file"""
    format: Optional[Literal["jsonl", "csv"]] = None
    """catalog format; inferred from the suffix when omitted"""

    def main(self) -> int:
        """Report the problems found."""
        result = verify_catalog(load_catalog(self.path, self.format), WorkerConfig())
        for problem in result.problems:
            CONSOLE.print(escape(problem), highlight=False)
        if result.ok:
            CONSOLE.print(f"catalog ok: {result.num_records} records", highlight=False)
            return EXIT_OK
        return EXIT_REFUTED


@dataclass
class Catalog:
    """Export or verify the catalog of the family."""

    action: tyro.conf.OmitSubcommandPrefixes[  # Omit prefixes of flags in subcommands.
        Union[
            Annotated[CatalogExport, tyro.conf.subcommand(name="export", prefix_name=False)],
            Annotated[CatalogVerify, tyro.conf.subcommand(name="verify", prefix_name=False)],
        ]
    ]

    def main(self) -> int:
        """Run the chosen action."""
        return self.action.main()


@dataclass
class Replicate:
    """Recompute every published figure; exits 0 iff every claim holds (matches, with --strict)."""

    format: Literal["text", "json"] = "text"
    """report format"""
    strict: bool = False
    """fail on recorded errata too"""
    output: Optional[Path] = None
    """also write the JSON report to this .json file"""
    profile: bool = False
    """print the average duration of the replication steps"""

    def main(self) -> int:
        """Print the report."""
        profiler_config = ProfilerConfig(enable_profiler=self.profile)
        setup_profiler(profiler_config)
        with status("[bold yellow]Replicating...", quiet=self.format == "json", console=ERR_CONSOLE):
            report = replicate_report(WorkerConfig())
        if self.format == "json":
            CONSOLE.out(json.dumps(report.to_dict(), indent=2), highlight=False)
        else:
            CONSOLE.print(replication_table(report))
            errata = report.errata()
            summary = f"{len(report.claims)} claims, {len(errata)} errata"
            CONSOLE.print(summary + (", all hold" if report.all_hold else ", SOME CLAIMS FAIL"), highlight=False)
        if self.output is not None:
            if self.output.suffix != ".json":
                raise UsageError(f"--output must be a .json file, got {self.output}")
            io.write_to_json(self.output, report.to_dict())
        flush_profiler(profiler_config, console=ERR_CONSOLE)
        passed = report.all_match if self.strict else report.all_hold
        return EXIT_OK if passed else EXIT_REFUTED


@dataclass
class TruthTableCommand:
    """Render the truth table of a formula; '*' marks designated values."""

    formula: tyro.conf.Positional[str]
    """formula with at most 4 atoms"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print the table."""
        CONSOLE.print(truth_table(parse_formula(self.formula), resolve_logic(self.logic)))
        return EXIT_OK


@dataclass
class Axioms:
    """Check the Hilbert-style axiom schemas, the collapse schema and modus ponens against a logic."""

    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print one verdict per schema."""
        logic = resolve_logic(self.logic)
        verdicts = check_axiom_schemas(logic) + [check_collapse_schema(logic)]
        CONSOLE.print(verdict_table(verdicts, f"Axiom schemas under {_describe(self.logic)}"))
        violation = mp_violation(logic)
        if violation is None:
            CONSOLE.print("modus ponens preserves designated values", highlight=False)
        else:
            x, y = violation
            CONSOLE.print(f"modus ponens fails at x={x}, y={y}", highlight=False)
        return EXIT_OK


@dataclass
class Scan:
    """Compare tautologies with classical tautologies over all formulas up to a depth; exits 2 on mismatches."""

    bounds: ScanConfig = field(default_factory=ScanConfig)
    """depth, atom count and connectives of the enumerated formulas"""
    logic: str = "lp"
    """'lp' or a logic id in [0, 8191]"""

    def main(self) -> int:
        """Print the mismatching truth functions."""
        logic = resolve_logic(self.logic)
        scan = scan_from_config(self.bounds, logic)
        if scan.mismatches:
            CONSOLE.print(scan_table(scan))
        CONSOLE.print(scan_summary(scan), highlight=False)
        return EXIT_OK if scan.coincide else EXIT_REFUTED


Commands = Union[
    Annotated[Eval, tyro.conf.subcommand(name="eval")],
    Annotated[Entails, tyro.conf.subcommand(name="entails")],
    Annotated[Equiv, tyro.conf.subcommand(name="equiv")],
    Annotated[CheckLaw, tyro.conf.subcommand(name="check-law")],
    Annotated[Enumerate, tyro.conf.subcommand(name="enumerate")],
    Annotated[Catalog, tyro.conf.subcommand(name="catalog")],
    Annotated[Replicate, tyro.conf.subcommand(name="replicate")],
    Annotated[TruthTableCommand, tyro.conf.subcommand(name="tt")],
    Annotated[Axioms, tyro.conf.subcommand(name="axioms")],
    Annotated[Scan, tyro.conf.subcommand(name="scan")],
]


def run(args: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the subcommand and return its exit code.

    Args:
        args: command line without the program name; ``sys.argv[1:]`` when omitted.
    """
    try:
        command = tyro.cli(Commands, args=args)
    except SystemExit as exc:
        # argparse exits with 2 on bad arguments and 0 after --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return command.main()
    except (ValueError, KeyError, OSError) as exc:
        return report_error(str(exc))


def entrypoint():
    """Entrypoint for use with pyproject scripts."""
    tyro.extras.set_accent_color("bright_yellow")
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()

# For sphinx docs
get_parser_fn = lambda: tyro.extras.get_parser(Commands)  # noqa
