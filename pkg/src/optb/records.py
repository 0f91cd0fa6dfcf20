"""Line-delimited scan records.

A scan file starts with one header line, followed by one JSON object per
lens space in ascending m::

    {"format": "optb-scan", "version": 1, "beta": 2, "primes_only": true}
    {"m": 11, "n": 2, "answer": "NO", ...}

Re-running a scan against an existing file appends only the m values that
are not yet recorded.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from optb.decider import OptbVerdict, scan_family
from optb.errors import ScanFileError

FORMAT = "optb-scan"
VERSION = 1

RECORD_FIELDS = (
    "m", "n", "gof_count", "gof_case", "gof_witness", "surgeries",
    "answer", "reason", "outside_hypotheses", "congruence_check", "bullets_check",
)


def scan_record(verdict: OptbVerdict) -> dict:
    gof = verdict.gof.to_record()
    return {
        "m": verdict.lens.m,
        "n": verdict.lens.n,
        "gof_count": gof["count"],
        "gof_case": gof["case"],
        "gof_witness": gof["witness"],
        "surgeries": [str(s) for s in verdict.surgeries],
        "answer": verdict.answer.value,
        "reason": verdict.reason.value,
        "outside_hypotheses": verdict.outside_hypotheses,
        "congruence_check": verdict.congruence_check,
        "bullets_check": verdict.bullets_check,
    }


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)


def header(beta: int, primes_only: bool) -> dict:
    return {"format": FORMAT, "version": VERSION, "beta": beta, "primes_only": primes_only}


def read_scan(path) -> tuple[dict, list[dict]]:
    """Header and records of a scan file.  A truncated last line is dropped."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise ScanFileError(f"{path}: empty scan file")
    try:
        head = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ScanFileError(f"{path}: bad header: {exc}") from None
    if head.get("format") != FORMAT or head.get("version") != VERSION:
        raise ScanFileError(f"{path}: not a version {VERSION} {FORMAT} file")
    records = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError:
            if i == len(lines):
                break
            raise ScanFileError(f"{path}:{i}: bad record") from None
    return head, records


def scan_to_file(path, beta: int, m_max: int, primes_only: bool = True, workers: int = 1) -> list[dict]:
    """Extend the scan file at ``path`` up to ``m_max``; return the new records."""
    path = Path(path)
    done = set()
    if path.exists() and path.stat().st_size:
        head, records = read_scan(path)
        if head["beta"] != beta or head["primes_only"] != primes_only:
            raise ScanFileError(
                f"{path}: holds a scan with beta={head['beta']}, "
                f"primes_only={head['primes_only']}")
        done = {r["m"] for r in records}
        # rewrite without a possibly truncated tail
        body = [dumps(head)] + [dumps(r) for r in records]
        path.write_text("\n".join(body) + "\n")
    else:
        path.write_text(dumps(header(beta, primes_only)) + "\n")

    results = scan_family(beta, m_max, primes_only, skip=frozenset(done), workers=workers)
    new = [scan_record(v) for _, v in results]
    with path.open("a") as fh:
        for record in new:
            fh.write(dumps(record) + "\n")
        fh.flush()
        os.fsync(fh.fileno())
    return new
