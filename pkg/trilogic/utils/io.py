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
Input/output utils.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence


def write_to_json(filename: Path, content: dict):
    """Write data to a JSON file.

    Args:
        filename: The filename to write to.
        content: The dictionary data to write.
    """
    assert filename.suffix == ".json"
    with open(filename, "w", encoding="UTF-8") as file:
        json.dump(content, file, indent=2)


def load_from_jsonl(filename: Path) -> List[Dict[str, Any]]:
    """Load one JSON object per non-blank line.

    Args:
        filename: The filename to load from.

    Raises:
        ValueError: a line is not a JSON object; the message names the line.
    """
    records = []
    with open(filename, encoding="UTF-8") as file:
        for line_number, line in enumerate(file, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {line_number}: {exc.msg}") from exc
            if not isinstance(record, dict):
                raise ValueError(f"line {line_number}: expected a JSON object")
            records.append(record)
    return records


def write_to_jsonl(filename: Path, records: Iterable[Dict[str, Any]]):
    """Write one compact JSON object per line.

    Args:
        filename: The filename to write to.
        records: The dictionaries to write.
    """
    with open(filename, "w", encoding="UTF-8") as file:
        for record in records:
            file.write(json.dumps(record, separators=(",", ":")) + "\n")


def load_from_csv(filename: Path) -> List[Dict[str, str]]:
    """Load rows of a CSV file with a header line.

    Args:
        filename: The filename to load from.
    """
    with open(filename, encoding="UTF-8", newline="") as file:
        return list(csv.DictReader(file))


def write_to_csv(filename: Path, fieldnames: Sequence[str], rows: Iterable[Dict[str, Any]]):
    """Write rows to a CSV file with a header line.

    Args:
        filename: The filename to write to.
        fieldnames: Column order.
        rows: The dictionaries to write.
    """
    with open(filename, "w", encoding="UTF-8", newline="") as file:
        writer = csv.DictWriter(file, fieldnames=list(fieldnames))
        writer.writeheader()
        writer.writerows(rows)
