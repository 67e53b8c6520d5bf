"""Tabular rendering and CSV export of cross-validation reports."""

from __future__ import annotations

import csv
import json

from .cv import CvReport

__all__ = ["table_report", "write_reports_csv", "read_reports_csv"]

REPORT_SCHEMA = "svm-harness.cv.v1"

_COLUMNS = [
    "dataset",
    "binning",
    "n_graphs",
    "folds",
    "repeats",
    "mean_accuracy",
    "std_accuracy",
    "mean_balanced_accuracy",
    "std_balanced_accuracy",
    "runtime_seconds",
]


def table_report(reports: list[CvReport]) -> str:
    """Human-readable table, rows sorted by dataset name."""
    header = ["dataset", "binning", "G", "accuracy %", "balanced %", "runtime s"]
    rows = [header]
    for r in sorted(reports, key=lambda r: (r.dataset, r.binning)):
        rows.append(
            [
                r.dataset,
                r.binning,
                str(r.n_graphs),
                f"{r.mean_accuracy:.2f} ± {r.std_accuracy:.2f}",
                f"{r.mean_balanced_accuracy:.2f} ± {r.std_balanced_accuracy:.2f}",
                f"{r.runtime_seconds:.2f}",
            ]
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "-" * len(lines[0]))
    return "\n".join(lines)


def write_reports_csv(reports: list[CvReport], path) -> None:
    """CSV export, one row per report; chosen-C distribution JSON-encoded."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema={REPORT_SCHEMA}\n")
        writer = csv.writer(fh)
        writer.writerow(_COLUMNS + ["bandwidth", "chosen_c"])
        for r in sorted(reports, key=lambda r: (r.dataset, r.binning)):
            writer.writerow(
                [getattr(r, c) for c in _COLUMNS]
                + ["" if r.bandwidth is None else repr(r.bandwidth), json.dumps(r.chosen_c)]
            )


def read_reports_csv(path) -> list[dict]:
    """Read back a report CSV as a list of dicts (numeric fields converted)."""
    with open(path) as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    out = []
    for row in csv.DictReader(lines):
        for key in _COLUMNS[2:] + ["bandwidth"]:
            if row.get(key):
                row[key] = float(row[key])
        row["chosen_c"] = json.loads(row["chosen_c"])
        out.append(row)
    return out
