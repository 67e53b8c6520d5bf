"""Readers for the feature/Gram CSV exports produced by the sampling pipeline.

Feature files (``tgbs.features.v1``) have a ``# schema=`` comment line, a
header row ``id,label,f0,...``, and one row per graph. Gram files
(``tgbs.gram.v1``) are plain numeric G x G matrices; their labels live in the
JSON sidecar next to the CSV. Both kinds may carry a ``<path>.json`` sidecar
with the featurization parameters.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import os

import numpy as np

__all__ = ["FeatureTable", "GramTable", "read_features_csv", "read_gram_csv", "detect_kind"]

FEATURES_SCHEMA = "tgbs.features.v1"
GRAM_SCHEMA = "tgbs.gram.v1"


@dataclasses.dataclass(frozen=True)
class FeatureTable:
    """Feature matrix (one row per graph) plus labels and source parameters."""

    ids: np.ndarray
    labels: np.ndarray
    values: np.ndarray
    params: dict

    def __post_init__(self):
        if self.values.ndim != 2 or self.values.shape[0] != self.labels.size:
            raise ValueError("feature matrix must have one row per label")


@dataclasses.dataclass(frozen=True)
class GramTable:
    """Precomputed kernel matrix plus labels and source parameters."""

    values: np.ndarray
    labels: np.ndarray
    params: dict

    def __post_init__(self):
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError("Gram matrix must be square")
        if self.labels.size != v.shape[0]:
            raise ValueError("Gram matrix needs one label per row")
        if not np.allclose(v, v.T):
            raise ValueError("Gram matrix must be symmetric")


def _read_lines(path):
    with open(path) as fh:
        schema = None
        rows = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if line.startswith("# schema="):
                    schema = line.split("=", 1)[1]
                continue
            rows.append(line)
    return schema, rows


def _read_sidecar(path) -> dict:
    sidecar = str(path) + ".json"
    if os.path.exists(sidecar):
        with open(sidecar) as fh:
            return json.load(fh)
    return {}


def detect_kind(path) -> str:
    """Return ``"features"`` or ``"gram"`` from the file's schema line."""
    schema, rows = _read_lines(path)
    if schema == FEATURES_SCHEMA:
        return "features"
    if schema == GRAM_SCHEMA:
        return "gram"
    # fall back on the header row for schema-less files
    if rows and rows[0].startswith("id,label"):
        return "features"
    raise ValueError(f"{path}: unrecognized schema {schema!r}")


def read_features_csv(path) -> FeatureTable:
    """Parse a feature export: ``id,label,f0..`` rows plus optional sidecar."""
    schema, rows = _read_lines(path)
    if schema not in (None, FEATURES_SCHEMA):
        raise ValueError(f"{path}: expected {FEATURES_SCHEMA}, found {schema}")
    if not rows:
        raise ValueError(f"{path}: empty feature file")
    parsed = list(csv.reader(rows))
    header = parsed[0]
    if header[:2] != ["id", "label"]:
        raise ValueError(f"{path}: header must start with id,label")
    body = parsed[1:]
    if not body:
        raise ValueError(f"{path}: no feature rows")
    ids = np.array([int(r[0]) for r in body])
    labels = np.array([int(r[1]) for r in body])
    values = np.array([[float(x) for x in r[2:]] for r in body])
    return FeatureTable(ids, labels, values, _read_sidecar(path))


def read_gram_csv(path) -> GramTable:
    """Parse a Gram export; labels come from the mandatory JSON sidecar."""
    schema, rows = _read_lines(path)
    if schema not in (None, GRAM_SCHEMA):
        raise ValueError(f"{path}: expected {GRAM_SCHEMA}, found {schema}")
    if not rows:
        raise ValueError(f"{path}: empty Gram file")
    values = np.array([[float(x) for x in r] for r in csv.reader(rows)])
    params = _read_sidecar(path)
    if "labels" not in params:
        raise ValueError(f"{path}: Gram sidecar with labels is required")
    labels = np.array([int(v) for v in params["labels"]])
    return GramTable(values, labels, params)
