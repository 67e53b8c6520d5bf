import json

import numpy as np
import pytest


def write_features(path, values, labels, params=None):
    """Write a feature CSV in the exported format plus its JSON sidecar."""
    values = np.asarray(values, dtype=float)
    lines = ["# schema=tgbs.features.v1"]
    lines.append(",".join(["id", "label"] + [f"f{i}" for i in range(values.shape[1])]))
    for i, (row, label) in enumerate(zip(values, labels)):
        lines.append(",".join([str(i), str(label)] + [repr(float(v)) for v in row]))
    path.write_text("\n".join(lines) + "\n")
    (path.parent / (path.name + ".json")).write_text(json.dumps(params or {}))


def write_gram(path, values, labels, params=None):
    """Write a Gram CSV plus the sidecar carrying labels."""
    values = np.asarray(values, dtype=float)
    lines = ["# schema=tgbs.gram.v1"]
    for row in values:
        lines.append(",".join(repr(float(v)) for v in row))
    path.write_text("\n".join(lines) + "\n")
    sidecar = dict(params or {})
    sidecar["labels"] = [int(v) for v in labels]
    (path.parent / (path.name + ".json")).write_text(json.dumps(sidecar))


@pytest.fixture
def separable_data():
    """Two well-separated Gaussian blobs, 30 points per class."""
    rng = np.random.default_rng(0)
    a = rng.normal(0.0, 0.3, size=(30, 4))
    b = rng.normal(5.0, 0.3, size=(30, 4))
    values = np.vstack([a, b])
    labels = np.array([0] * 30 + [1] * 30)
    return values, labels
