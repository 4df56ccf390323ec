"""
Test json, json lines and csv helpers
"""

import json

import pytest

from trilogic.utils import io


def test_json(tmp_path):
    """JSON files read back as written."""
    path = tmp_path / "report.json"
    io.write_to_json(path, {"claims": [1, 2], "ok": True})
    assert json.loads(path.read_text(encoding="UTF-8")) == {"claims": [1, 2], "ok": True}


def test_jsonl(tmp_path):
    """One object per line; blank lines are skipped."""
    path = tmp_path / "rows.jsonl"
    io.write_to_jsonl(path, [{"id": 1}, {"id": 2}])
    assert path.read_text(encoding="UTF-8") == '{"id":1}\n{"id":2}\n'
    path.write_text('{"id": 1}\n\n{"id": 2}\n', encoding="UTF-8")
    assert io.load_from_jsonl(path) == [{"id": 1}, {"id": 2}]


def test_jsonl_errors(tmp_path):
    """Malformed lines and non-objects name the line."""
    path = tmp_path / "rows.jsonl"
    path.write_text('{"id": 1}\n[1, 2]\n', encoding="UTF-8")
    with pytest.raises(ValueError, match="line 2"):
        io.load_from_jsonl(path)
    path.write_text("{oops\n", encoding="UTF-8")
    with pytest.raises(ValueError, match="line 1"):
        io.load_from_jsonl(path)


def test_csv(tmp_path):
    """CSV rows read back as strings in header order."""
    path = tmp_path / "rows.csv"
    io.write_to_csv(path, ["id", "neg"], [{"id": 0, "neg": "ftt"}, {"id": 16, "neg": "ftb"}])
    rows = io.load_from_csv(path)
    assert rows == [{"id": "0", "neg": "ftt"}, {"id": "16", "neg": "ftb"}]


def test_csv_any_suffix(tmp_path):
    """The CSV helpers do not depend on the file suffix."""
    path = tmp_path / "rows.dat"
    io.write_to_csv(path, ["id"], [{"id": 7418}])
    assert io.load_from_csv(path) == [{"id": "7418"}]
