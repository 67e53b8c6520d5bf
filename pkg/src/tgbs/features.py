"""Coarse-grained sample features, RBF Gram matrices, and balanced accuracy.

Count binning histograms the total clicks per realization; detector binning
records per-mode click frequencies (optionally sorted so the vector is
invariant under node relabeling). Feature vectors of different-size graphs
are aligned by zero padding to the dataset's largest node count.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import json
import logging

import numpy as np

from .datasets import LabeledDataset
from .embedding import NoSignalError, embed
from .sampler import SampleBatch, sample_problem

__all__ = [
    "Binning",
    "FeatureVector",
    "KernelMatrix",
    "count_binning",
    "detector_binning",
    "rbf_gram",
    "default_bandwidth",
    "balanced_accuracy",
    "featurize_dataset",
    "write_features_csv",
    "write_gram_csv",
]

log = logging.getLogger(__name__)

FEATURES_SCHEMA = "tgbs.features.v1"
GRAM_SCHEMA = "tgbs.gram.v1"


class Binning(enum.Enum):
    COUNT = "count"
    DETECTOR = "detector"


@dataclasses.dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    binning: Binning
    n_samples: int

    def __post_init__(self):
        if np.any(self.values < 0):
            raise ValueError("feature entries must be non-negative")


@dataclasses.dataclass(frozen=True)
class KernelMatrix:
    values: np.ndarray
    bandwidth: float

    def __post_init__(self):
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError("kernel matrix must be square")
        if self.bandwidth <= 0:
            raise ValueError("bandwidth must be positive")


def count_binning(samples: SampleBatch, pad_to: int, cumulative: bool = False) -> FeatureVector:
    """Normalized histogram of total clicks per realization, bins 0..pad_to.

    ``cumulative`` applies a running sum, turning the histogram into an
    empirical CDF.
    """
    if pad_to < samples.mode_count:
        raise ValueError("pad_to must be at least the batch's mode count")
    counts = samples.click_counts()
    hist = np.bincount(counts, minlength=pad_to + 1).astype(float)
    hist /= samples.n_realizations
    if cumulative:
        hist = np.cumsum(hist)
    return FeatureVector(hist, Binning.COUNT, samples.n_realizations)


def detector_binning(
    samples: SampleBatch, pad_to: int, sort_descending: bool = True
) -> FeatureVector:
    """Per-mode click frequency, zero padded to ``pad_to`` entries.

    Sorting descending removes the node-labeling dependence, which is what
    classification wants; the unsorted variant keeps raw detector order.
    """
    if pad_to < samples.mode_count:
        raise ValueError("pad_to must be at least the batch's mode count")
    freq = samples.clicks.mean(axis=0)
    if sort_descending:
        freq = np.sort(freq)[::-1]
    padded = np.zeros(pad_to)
    padded[: freq.size] = freq
    return FeatureVector(padded, Binning.DETECTOR, samples.n_realizations)


def rbf_gram(features: list[FeatureVector], bandwidth: float) -> KernelMatrix:
    """Pairwise RBF kernel K_ij = exp(-|x_i - x_j|^2 / (2 bandwidth^2))."""
    if bandwidth <= 0:
        raise ValueError("bandwidth must be positive")
    lengths = {f.values.size for f in features}
    if len(lengths) > 1:
        raise ValueError("all feature vectors must have the same length")
    x = np.array([f.values for f in features])
    sq = np.sum(x**2, axis=1)
    dist2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * (x @ x.T), 0.0)
    np.fill_diagonal(dist2, 0.0)
    values = np.exp(-dist2 / (2.0 * bandwidth**2))
    return KernelMatrix(values, bandwidth)


def default_bandwidth(features: list[FeatureVector]) -> float:
    """Data-scaled heuristic: bandwidth^2 = D * Var(all feature entries)."""
    x = np.concatenate([f.values for f in features])
    d = features[0].values.size
    var = float(np.var(x))
    if var == 0.0:
        return 1.0
    return float(np.sqrt(d * var))


def balanced_accuracy(predicted, actual, n_classes: int) -> float:
    """Mean per-class recall over classes 0..n_classes-1."""
    predicted = np.asarray(predicted)
    actual = np.asarray(actual)
    if predicted.shape != actual.shape:
        raise ValueError("label lists must have equal length")
    recalls = []
    for cls in range(n_classes):
        members = actual == cls
        if not members.any():
            raise ValueError(f"class {cls} has no instances; recall undefined")
        recalls.append(float((predicted[members] == cls).mean()))
    return float(np.mean(recalls))


def featurize_dataset(
    dataset: LabeledDataset,
    nbar: float,
    gamma: float,
    n_samples: int,
    binning: Binning,
    rng_seed: int,
    sort_descending: bool = True,
    cumulative: bool = False,
) -> tuple[list[FeatureVector], list[int], list[int]]:
    """Sample every graph and compute aligned feature vectors.

    Returns (features, labels, skipped_indices); edgeless graphs are skipped
    with a logged reason rather than failing the whole dataset.
    """
    pad_to = max(g.node_count for g in dataset.graphs)
    features: list[FeatureVector] = []
    labels: list[int] = []
    skipped: list[int] = []
    for i, (g, label) in enumerate(zip(dataset.graphs, dataset.labels)):
        seed = int(np.random.SeedSequence([rng_seed, i]).generate_state(1)[0])
        try:
            problem = embed(g.adjacency, nbar, gamma)
        except NoSignalError:
            log.warning("graph %d skipped: no edges to embed", i)
            skipped.append(i)
            continue
        batch = sample_problem(problem, n_samples, seed)
        if binning is Binning.COUNT:
            fv = count_binning(batch, pad_to, cumulative=cumulative)
        else:
            fv = detector_binning(batch, pad_to, sort_descending=sort_descending)
        features.append(fv)
        labels.append(label)
    return features, labels, skipped


def write_features_csv(
    features: list[FeatureVector],
    labels: list[int],
    path,
    params: dict | None = None,
) -> None:
    """One row per graph: id, label, then the feature entries. JSON sidecar
    carries the featurization parameters."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema={FEATURES_SCHEMA}\n")
        writer = csv.writer(fh)
        d = features[0].values.size if features else 0
        writer.writerow(["id", "label"] + [f"f{i}" for i in range(d)])
        for i, (fv, label) in enumerate(zip(features, labels)):
            writer.writerow([i, label] + [repr(float(v)) for v in fv.values])
    _write_sidecar(path, features, params)


def write_gram_csv(
    kernel: KernelMatrix,
    labels: list[int],
    path,
    params: dict | None = None,
) -> None:
    """Plain numeric G x G CSV; labels and parameters go in the JSON sidecar."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema={GRAM_SCHEMA}\n")
        writer = csv.writer(fh)
        for row in kernel.values:
            writer.writerow([repr(float(v)) for v in row])
    sidecar = dict(params or {})
    sidecar.update(bandwidth=kernel.bandwidth, labels=list(labels))
    with open(str(path) + ".json", "w") as fh:
        json.dump(sidecar, fh, indent=2)


def _write_sidecar(path, features: list[FeatureVector], params: dict | None) -> None:
    sidecar = dict(params or {})
    if features:
        sidecar.setdefault("binning", features[0].binning.value)
        sidecar.setdefault("n_samples", features[0].n_samples)
    with open(str(path) + ".json", "w") as fh:
        json.dump(sidecar, fh, indent=2)
