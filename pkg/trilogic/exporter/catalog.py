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

"""
Persistent catalog of the family: one record per logic with its tables and law profile, as JSON lines or CSV.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
from rich.console import Console
from typing_extensions import Literal

from trilogic.configs.base_config import WorkerConfig
from trilogic.family.enumeration import FAMILY_SIZE, InvalidLogicError, encode
from trilogic.family.logic_spec import LogicSpec
from trilogic.family.tables import LogicTables
from trilogic.laws.checking import LawProfile, family_law_profiles
from trilogic.laws.schemas import NUM_BUILTIN_LAWS
from trilogic.semantics.truth_values import VALUES
from trilogic.utils import io
from trilogic.utils.rich_utils import get_progress

CatalogFormat = Literal["jsonl", "csv"]
CATALOG_FIELDS = ("id", "neg", "and", "or", "imp", "profile")
_SYMBOLS = np.array([str(value) for value in VALUES])


class CatalogError(ValueError):
    """Raised for unreadable catalogs and records that fail validation."""


@dataclass(frozen=True)
class CatalogRecord:
    """One logic of the catalog."""

    logic_id: int
    neg: str
    """negation table, 3 symbols in argument order t, f, b"""
    and_: str
    """conjunction table, 9 symbols row-major"""
    or_: str
    imp: str
    profile: str
    """23 characters, law (1) first, 1 iff the law holds"""

    @classmethod
    def from_logic(cls, logic: LogicSpec, profile: LawProfile) -> CatalogRecord:
        """Record of a family member."""
        tables = logic.to_strings()
        return cls(
            logic_id=encode(logic),
            neg=tables["neg"],
            and_=tables["and"],
            or_=tables["or"],
            imp=tables["imp"],
            profile=profile.bits,
        )

    def logic(self) -> LogicSpec:
        """Tables of the record."""
        try:
            return LogicSpec.from_strings(self.neg, self.and_, self.or_, self.imp)
        except ValueError as exc:
            raise CatalogError(f"record {self.logic_id}: {exc}") from exc

    def law_profile(self) -> LawProfile:
        """Stored profile."""
        try:
            return LawProfile.from_bits(self.profile)
        except ValueError as exc:
            raise CatalogError(f"record {self.logic_id}: {exc}") from exc

    def to_dict(self) -> Dict[str, Any]:
        """Field mapping with the catalog keys ``id, neg, and, or, imp, profile``."""
        return {
            "id": self.logic_id,
            "neg": self.neg,
            "and": self.and_,
            "or": self.or_,
            "imp": self.imp,
            "profile": self.profile,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CatalogRecord:
        """Inverse of :meth:`to_dict`; ids may be given as decimal strings (CSV)."""
        missing = [key for key in CATALOG_FIELDS if key not in data]
        if missing:
            raise CatalogError(f"record is missing fields {missing}")
        try:
            logic_id = int(data["id"])
        except (TypeError, ValueError) as exc:
            raise CatalogError(f"record id must be an integer, got {data['id']!r}") from exc
        return cls(
            logic_id=logic_id,
            neg=str(data["neg"]),
            and_=str(data["and"]),
            or_=str(data["or"]),
            imp=str(data["imp"]),
            profile=str(data["profile"]),
        )

    def validate(self, expected_profile: Optional[LawProfile] = None) -> None:
        """Check that the tables belong to the family under this id and, if given, that the profile matches.

        Raises:
            CatalogError: naming the first failed check.
        """
        logic = self.logic()
        try:
            logic_id = encode(logic)
        except InvalidLogicError as exc:
            raise CatalogError(f"record {self.logic_id}: {exc}") from exc
        if logic_id != self.logic_id:
            raise CatalogError(f"record {self.logic_id}: tables encode to id {logic_id}")
        profile = self.law_profile()
        if expected_profile is not None and profile != expected_profile:
            raise CatalogError(
                f"record {self.logic_id}: stored profile {profile.bits} differs from recomputed {expected_profile.bits}"
            )


def _table_strings(tables: LogicTables) -> Dict[str, List[str]]:
    """Symbol strings of every table of a batch, keyed by catalog field."""
    flat = {
        "neg": tables.neg,
        "and": tables.and_.reshape(len(tables), 9),
        "or": tables.or_.reshape(len(tables), 9),
        "imp": tables.imp.reshape(len(tables), 9),
    }
    return {name: ["".join(row) for row in _SYMBOLS[array]] for name, array in flat.items()}


def _profile_strings(profiles: np.ndarray) -> List[str]:
    return ["".join(row) for row in np.where(profiles, "1", "0")]


@functools.lru_cache(maxsize=1)
def _family_strings() -> Dict[str, List[str]]:
    return _table_strings(LogicTables.family())


def resolve_format(path: Path, catalog_format: Optional[CatalogFormat] = None) -> CatalogFormat:
    """Format given explicitly or implied by the file suffix."""
    if catalog_format is not None:
        return catalog_format
    if path.suffix == ".csv":
        return "csv"
    if path.suffix in (".jsonl", ".json"):
        return "jsonl"
    raise CatalogError(f"cannot infer the catalog format of {path}; use a .jsonl or .csv suffix")


def export_catalog(
    path: Path,
    catalog_format: Optional[CatalogFormat] = None,
    config: Optional[WorkerConfig] = None,
    show_progress: bool = True,
    console: Optional[Console] = None,
) -> int:
    """Write the catalog of the whole family in id order.

    Args:
        path: output file; parent directories are created.
        catalog_format: ``jsonl`` or ``csv``, inferred from the suffix when omitted.
        config: worker settings for computing the profiles.
        show_progress: draw a progress bar while profiling.
        console: console of the progress bar; the stdout console by default.

    Returns:
        The number of records written.
    """
    output_format = resolve_format(path, catalog_format)
    family = LogicTables.family()
    if show_progress:
        progress = get_progress("[bold]Profiling logics", suffix="logics/s", console=console)
        with progress:
            task = progress.add_task("profiles", total=len(family))
            profiles = family_law_profiles(config, on_chunk=lambda n: progress.advance(task, n))
    else:
        profiles = family_law_profiles(config)

    strings = _table_strings(family)
    bits = _profile_strings(profiles)
    records = [
        CatalogRecord(
            logic_id=int(logic_id),
            neg=strings["neg"][row],
            and_=strings["and"][row],
            or_=strings["or"][row],
            imp=strings["imp"][row],
            profile=bits[row],
        )
        for row, logic_id in enumerate(family.ids)
    ]
    path.parent.mkdir(parents=True, exist_ok=True)
    if output_format == "csv":
        io.write_to_csv(path, CATALOG_FIELDS, (record.to_dict() for record in records))
    else:
        io.write_to_jsonl(path, (record.to_dict() for record in records))
    return len(records)


def load_catalog(path: Path, catalog_format: Optional[CatalogFormat] = None) -> List[CatalogRecord]:
    """Read catalog records without validating them."""
    input_format = resolve_format(path, catalog_format)
    if not path.exists():
        raise CatalogError(f"catalog {path} does not exist")
    try:
        rows = io.load_from_csv(path) if input_format == "csv" else io.load_from_jsonl(path)
    except ValueError as exc:
        raise CatalogError(f"{path}: {exc}") from exc
    return [CatalogRecord.from_dict(row) for row in rows]


@dataclass(frozen=True)
class CatalogVerification:
    """Outcome of :func:`verify_catalog`."""

    num_records: int
    problems: List[str]

    @property
    def ok(self) -> bool:
        """Whether the catalog is a complete and correct copy of the family."""
        return not self.problems


def verify_catalog(records: List[CatalogRecord], config: Optional[WorkerConfig] = None) -> CatalogVerification:
    """Re-validate imported records: family membership, id, recomputed profile, and coverage of every id once."""
    problems: List[str] = []
    valid: List[CatalogRecord] = []
    family = _family_strings()
    for record in records:
        row = record.logic_id
        member_copy = (
            0 <= row < FAMILY_SIZE
            and (record.neg, record.and_, record.or_, record.imp)
            == (family["neg"][row], family["and"][row], family["or"][row], family["imp"][row])
            and len(record.profile) == NUM_BUILTIN_LAWS
            and not set(record.profile) - {"0", "1"}
        )
        # anything else gets the detailed check for its message
        if not member_copy:
            try:
                record.validate()
            except CatalogError as exc:
                problems.append(str(exc))
                continue
        valid.append(record)

    if valid:
        tables = LogicTables.from_ids(np.array([record.logic_id for record in valid], dtype=np.int64))
        recomputed = _profile_strings(family_law_profiles(config, tables=tables))
        for record, bits in zip(valid, recomputed):
            if record.profile != bits:
                problems.append(
                    f"record {record.logic_id}: stored profile {record.profile} differs from recomputed {bits}"
                )

    ids = Counter(record.logic_id for record in records)
    duplicates = sorted(i for i, count in ids.items() if count > 1)
    if duplicates:
        problems.append(f"duplicate ids: {duplicates[:10]}")
    missing = FAMILY_SIZE - len(set(ids) & set(range(FAMILY_SIZE)))
    if missing:
        problems.append(f"{missing} of the {FAMILY_SIZE} logics are missing")
    return CatalogVerification(num_records=len(records), problems=problems)
