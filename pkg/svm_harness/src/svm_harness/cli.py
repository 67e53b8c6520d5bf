"""Command-line entry point: run nested CV on exported feature/Gram files."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import io
from .cv import DEFAULT_C_GRID, nested_cv
from .report import table_report, write_reports_csv

log = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="svm-harness",
        description="Nested cross-validation of an SVM on exported graph features",
    )
    p.add_argument("inputs", nargs="+", help="feature or Gram CSV files")
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bandwidth", type=float, default=None, help="RBF bandwidth override")
    p.add_argument(
        "--c-grid", type=float, nargs="+", default=list(DEFAULT_C_GRID), metavar="C"
    )
    p.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    p.add_argument("--output", default=None, help="report CSV path (default: cv_report.csv)")
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    reports = []
    failures = 0
    for path in args.inputs:
        try:
            kind = io.detect_kind(path)
            if kind == "gram":
                table = io.read_gram_csv(path)
                data, labels, precomputed = table.values, table.labels, True
            else:
                table = io.read_features_csv(path)
                data, labels, precomputed = table.values, table.labels, False
            name = table.params.get("dataset", os.path.basename(path))
            reports.append(
                nested_cv(
                    data,
                    labels,
                    dataset=name,
                    binning=table.params.get("binning", "unknown"),
                    c_grid=args.c_grid,
                    repeats=args.repeats,
                    folds=args.folds,
                    rng_seed=args.seed,
                    precomputed=precomputed,
                    bandwidth=args.bandwidth,
                    time_budget_seconds=args.time_budget,
                )
            )
        except Exception:
            log.exception("failed on %s", path)
            failures += 1
    print(table_report(reports))
    out = args.output or "cv_report.csv"
    write_reports_csv(reports, out)
    print(f"report written to {out}")
    return 1 if failures and not reports else 0


if __name__ == "__main__":
    sys.exit(main())
