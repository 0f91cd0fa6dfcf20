import json

import pytest

from optb.errors import ScanFileError
from optb.records import RECORD_FIELDS, dumps, read_scan, scan_to_file


def test_scan_file_layout(tmp_path):
    path = tmp_path / "scan.jsonl"
    new = scan_to_file(path, 2, 30, primes_only=True)
    lines = path.read_text().splitlines()
    assert json.loads(lines[0]) == {"format": "optb-scan", "version": 1, "beta": 2, "primes_only": True}
    assert len(lines) == 1 + len(new)
    head, records = read_scan(path)
    assert records == new
    assert [r["m"] for r in records] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    for r in records:
        assert tuple(sorted(r)) == tuple(sorted(RECORD_FIELDS))
    r19 = next(r for r in records if r["m"] == 19)
    assert r19["answer"] == "NO" and r19["congruence_check"] is False and r19["bullets_check"] is True


def test_scan_resumes(tmp_path, monkeypatch):
    path = tmp_path / "scan.jsonl"
    scan_to_file(path, 2, 20)
    from optb import records

    seen = []
    real = records.scan_family

    def spy(*args, **kwargs):
        seen.append(kwargs["skip"])
        return real(*args, **kwargs)

    monkeypatch.setattr(records, "scan_family", spy)
    new = scan_to_file(path, 2, 40)
    assert [r["m"] for r in new] == [23, 29, 31, 37]
    assert seen[0] == {3, 5, 7, 11, 13, 17, 19}
    _, recs = read_scan(path)
    assert [r["m"] for r in recs] == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert scan_to_file(path, 2, 40) == []


def test_resume_drops_truncated_tail(tmp_path):
    path = tmp_path / "scan.jsonl"
    scan_to_file(path, 2, 20)
    with path.open("a") as fh:
        fh.write('{"m": 23, "n"')
    new = scan_to_file(path, 2, 23)
    assert [r["m"] for r in new] == [23]
    _, recs = read_scan(path)
    assert recs[-1]["m"] == 23


def test_mismatched_scan(tmp_path):
    path = tmp_path / "scan.jsonl"
    scan_to_file(path, 2, 20)
    with pytest.raises(ScanFileError):
        scan_to_file(path, 3, 20)
    with pytest.raises(ScanFileError):
        scan_to_file(path, 2, 20, primes_only=False)


def test_bad_files(tmp_path):
    path = tmp_path / "x.jsonl"
    path.write_text('{"format": "other", "version": 1}\n')
    with pytest.raises(ScanFileError):
        read_scan(path)
    path.write_text("")
    with pytest.raises(ScanFileError):
        read_scan(path)
    path.write_text('{"format": "optb-scan", "version": 1, "beta": 2, "primes_only": true}\nnot json\n{}\n')
    with pytest.raises(ScanFileError):
        read_scan(path)


def test_dumps_is_stable():
    rec = {"b": [1, None], "a": {"z": True, "y": "s"}}
    assert dumps(json.loads(dumps(rec))) == dumps(rec)
