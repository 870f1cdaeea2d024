#!/usr/bin/env python3
"""Regenerate golden/<id>.json for every catalog instance.

Run from the repository root after any change that affects reports:

    python scripts/make_goldens.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from z2spec.catalog import CATALOG
from z2spec.verify import report_to_json, run_verify


def main() -> int:
    golden_dir = pathlib.Path(__file__).resolve().parents[1] / "golden"
    golden_dir.mkdir(exist_ok=True)
    failures = 0
    for entry in CATALOG:
        report = run_verify(entry.spec())
        text = report_to_json(report)
        (golden_dir / f"{entry.instance_id}.json").write_text(text)
        marker = "ok" if report.status == "pass" else report.status.upper()
        if report.status != "pass":
            failures += 1
        print(f"{entry.instance_id}: {marker}")
    print(f"wrote {len(CATALOG)} golden reports to {golden_dir}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
