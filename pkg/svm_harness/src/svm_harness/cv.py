"""Nested cross-validation protocol for SVM classification of graph features.

The evaluation loop is a repeated nested (double) k-fold: the outer folds
score the model, an inner k-fold grid search on each outer training split
picks the SVM regularization constant C. Works either on raw feature vectors
(RBF kernel fitted internally, data-scaled bandwidth by default) or on a
precomputed kernel matrix.
"""

from __future__ import annotations

import collections
import dataclasses
import logging
import time
import warnings

import numpy as np
from sklearn.model_selection import StratifiedKFold
from sklearn.svm import SVC

__all__ = [
    "CvReport",
    "DEFAULT_C_GRID",
    "balanced_accuracy",
    "default_bandwidth",
    "nested_cv",
]

log = logging.getLogger(__name__)

# C grid spanning 1e-4 .. 1e3 in decades
DEFAULT_C_GRID = tuple(10.0**k for k in range(-4, 4))


@dataclasses.dataclass(frozen=True)
class CvReport:
    """Summary of one repeated nested cross-validation run (accuracies in %)."""

    dataset: str
    binning: str
    mean_accuracy: float
    std_accuracy: float
    mean_balanced_accuracy: float
    std_balanced_accuracy: float
    chosen_c: dict
    runtime_seconds: float
    n_graphs: int
    folds: int
    repeats: int
    bandwidth: float | None = None

    def __post_init__(self):
        for v in (self.mean_accuracy, self.mean_balanced_accuracy):
            if not 0.0 <= v <= 100.0:
                raise ValueError("accuracies must lie in [0, 100] percent")
        if self.std_accuracy < 0 or self.std_balanced_accuracy < 0:
            raise ValueError("standard deviations must be non-negative")


def balanced_accuracy(predicted, actual, n_classes: int) -> float:
    """Mean per-class recall over ``n_classes`` classes (same convention as
    the feature pipeline's metric: every class must appear in ``actual``)."""
    predicted = np.asarray(predicted)
    actual = np.asarray(actual)
    if predicted.shape != actual.shape:
        raise ValueError("prediction and label vectors must have equal length")
    recalls = []
    for c in range(n_classes):
        mask = actual == c
        if not mask.any():
            raise ValueError(f"class {c} absent from the label vector")
        recalls.append(float((predicted[mask] == c).mean()))
    return float(np.mean(recalls))


def _fold_balanced_accuracy(predicted, actual) -> float:
    """Balanced accuracy over the classes present in ``actual`` (an outer test
    fold may miss a rare class even under stratification)."""
    classes = np.unique(actual)
    return float(np.mean([(predicted[actual == c] == c).mean() for c in classes]))


def default_bandwidth(values: np.ndarray) -> float:
    """Data-scaled RBF bandwidth: sigma^2 = D * Var(all feature entries)."""
    var = float(np.var(values))
    if var == 0.0:
        return 1.0
    return float(np.sqrt(values.shape[1] * var))


def _make_svc(c: float, kernel: str, gamma: float | None) -> SVC:
    if kernel == "precomputed":
        return SVC(C=c, kernel="precomputed")
    return SVC(C=c, kernel="rbf", gamma=gamma)


def _effective_folds(labels: np.ndarray, folds: int) -> int:
    smallest = int(min(np.unique(labels, return_counts=True)[1]))
    if smallest < folds:
        warnings.warn(
            f"smallest class has {smallest} members; reducing folds from {folds}",
            stacklevel=3,
        )
        return max(2, smallest)
    return folds


def nested_cv(
    data: np.ndarray,
    labels,
    *,
    dataset: str = "unnamed",
    binning: str = "unknown",
    c_grid=DEFAULT_C_GRID,
    repeats: int = 10,
    folds: int = 10,
    rng_seed: int = 0,
    precomputed: bool = False,
    bandwidth: float | None = None,
    time_budget_seconds: float | None = None,
) -> CvReport:
    """Repeated nested k-fold cross-validation of an SVM.

    ``data`` is either a feature matrix (rows are graphs) or, with
    ``precomputed=True``, a full square kernel matrix. Each repeat reshuffles
    the folds with a seed derived from ``rng_seed``. Returns mean/std outer
    accuracy and balanced accuracy in percent plus the distribution of chosen
    C values. ``time_budget_seconds`` aborts between repeats once exceeded.
    """
    data = np.asarray(data, dtype=float)
    labels = np.asarray(labels, dtype=int)
    if labels.size != data.shape[0]:
        raise ValueError("one label per data row is required")
    if np.unique(labels).size < 2:
        raise ValueError("at least two classes are required")
    if len(c_grid) == 0:
        raise ValueError("the C grid must be non-empty")
    if precomputed:
        gamma = None
        kernel = "precomputed"
        if data.shape[0] != data.shape[1]:
            raise ValueError("precomputed kernel must be square")
    else:
        kernel = "rbf"
        if bandwidth is None:
            bandwidth = default_bandwidth(data)
        gamma = 1.0 / (2.0 * bandwidth**2)

    folds = _effective_folds(labels, folds)
    start = time.perf_counter()
    accs, baccs = [], []
    chosen = collections.Counter()
    repeats_done = 0
    for rep in range(repeats):
        # the first repeat always runs so the report is well defined
        if (
            rep > 0
            and time_budget_seconds is not None
            and time.perf_counter() - start > time_budget_seconds
        ):
            log.warning("time budget exhausted after %d repeats", rep)
            break
        outer = StratifiedKFold(n_splits=folds, shuffle=True, random_state=rng_seed + rep)
        for train, test in outer.split(np.zeros(labels.size), labels):
            best_c, best_score = None, -np.inf
            inner = StratifiedKFold(
                n_splits=_effective_folds(labels[train], folds),
                shuffle=True,
                random_state=rng_seed + 1000 + rep,
            )
            for c in c_grid:
                scores = []
                for itrain, ival in inner.split(np.zeros(train.size), labels[train]):
                    tr, va = train[itrain], train[ival]
                    clf = _make_svc(c, kernel, gamma)
                    if precomputed:
                        clf.fit(data[np.ix_(tr, tr)], labels[tr])
                        pred = clf.predict(data[np.ix_(va, tr)])
                    else:
                        clf.fit(data[tr], labels[tr])
                        pred = clf.predict(data[va])
                    scores.append(float((pred == labels[va]).mean()))
                if np.mean(scores) > best_score:
                    best_c, best_score = c, float(np.mean(scores))
            chosen[best_c] += 1
            clf = _make_svc(best_c, kernel, gamma)
            if precomputed:
                clf.fit(data[np.ix_(train, train)], labels[train])
                pred = clf.predict(data[np.ix_(test, train)])
            else:
                clf.fit(data[train], labels[train])
                pred = clf.predict(data[test])
            accs.append(float((pred == labels[test]).mean()))
            baccs.append(_fold_balanced_accuracy(pred, labels[test]))
        repeats_done += 1

    return CvReport(
        dataset=dataset,
        binning=binning,
        mean_accuracy=100.0 * float(np.mean(accs)),
        std_accuracy=100.0 * float(np.std(accs)),
        mean_balanced_accuracy=100.0 * float(np.mean(baccs)),
        std_balanced_accuracy=100.0 * float(np.std(baccs)),
        chosen_c=dict(sorted(chosen.items())),
        runtime_seconds=time.perf_counter() - start,
        n_graphs=int(labels.size),
        folds=folds,
        repeats=repeats_done,
        bandwidth=bandwidth,
    )
