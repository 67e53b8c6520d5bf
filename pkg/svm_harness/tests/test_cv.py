import dataclasses

import numpy as np
import pytest

from svm_harness.cv import balanced_accuracy, default_bandwidth, nested_cv


class TestBalancedAccuracy:
    def test_perfect(self):
        assert balanced_accuracy([0, 1, 1], [0, 1, 1], 2) == 1.0

    def test_hand_value(self):
        assert balanced_accuracy([0, 1, 1, 1, 0], [0, 0, 1, 1, 1], 2) == pytest.approx(7 / 12)

    def test_absent_class(self):
        with pytest.raises(ValueError):
            balanced_accuracy([0, 0], [0, 0], 2)

    def test_agrees_with_feature_pipeline(self):
        # cross-component consistency: same convention as the sampling
        # pipeline's metric, exact on identical label vectors
        tgbs_features = pytest.importorskip("tgbs.features")
        rng = np.random.default_rng(3)
        for _ in range(50):
            actual = rng.integers(0, 3, size=40)
            predicted = rng.integers(0, 3, size=40)
            if np.unique(actual).size < 3:
                continue
            assert balanced_accuracy(predicted, actual, 3) == tgbs_features.balanced_accuracy(
                predicted, actual, 3
            )


class TestNestedCv:
    def test_separable_accuracy_floor(self, separable_data):
        values, labels = separable_data
        report = nested_cv(values, labels, repeats=2, rng_seed=0)
        assert report.mean_accuracy >= 99.0

    def test_shuffled_labels_chance_level(self, separable_data):
        values, labels = separable_data
        shuffled = np.random.default_rng(0).permutation(labels)
        report = nested_cv(values, shuffled, repeats=3, rng_seed=0)
        assert 40.0 <= report.mean_balanced_accuracy <= 60.0

    def test_deterministic(self, separable_data):
        values, labels = separable_data
        a = nested_cv(values, labels, repeats=2, rng_seed=7)
        b = nested_cv(values, labels, repeats=2, rng_seed=7)
        da, db = dataclasses.asdict(a), dataclasses.asdict(b)
        da.pop("runtime_seconds"), db.pop("runtime_seconds")
        assert da == db

    def test_precomputed_matches_internal_rbf(self, separable_data):
        values, labels = separable_data
        bandwidth = default_bandwidth(values)
        sq = np.sum(values**2, axis=1)
        dist2 = sq[:, None] + sq[None, :] - 2 * values @ values.T
        gram = np.exp(-np.clip(dist2, 0, None) / (2 * bandwidth**2))
        gram = (gram + gram.T) / 2
        a = nested_cv(values, labels, repeats=2, rng_seed=4)
        b = nested_cv(gram, labels, repeats=2, rng_seed=4, precomputed=True)
        assert a.mean_accuracy == pytest.approx(b.mean_accuracy, abs=1e-9)
        assert a.mean_balanced_accuracy == pytest.approx(b.mean_balanced_accuracy, abs=1e-9)

    def test_small_class_reduces_folds(self):
        rng = np.random.default_rng(2)
        values = np.vstack([rng.normal(0, 1, (20, 3)), rng.normal(4, 1, (4, 3))])
        labels = np.array([0] * 20 + [1] * 4)
        with pytest.warns(UserWarning, match="reducing folds"):
            report = nested_cv(values, labels, repeats=1, rng_seed=0)
        assert report.folds == 4

    def test_validation(self, separable_data):
        values, labels = separable_data
        with pytest.raises(ValueError):
            nested_cv(values, labels[:-1])
        with pytest.raises(ValueError):
            nested_cv(values, np.zeros(len(labels), dtype=int))
        with pytest.raises(ValueError):
            nested_cv(values, labels, c_grid=[])
        with pytest.raises(ValueError):
            nested_cv(values, labels, precomputed=True)

    def test_time_budget_stops_early(self, separable_data):
        values, labels = separable_data
        report = nested_cv(values, labels, repeats=10, rng_seed=0, time_budget_seconds=0.0)
        assert report.repeats < 10

    def test_chosen_c_in_grid(self, separable_data):
        values, labels = separable_data
        report = nested_cv(values, labels, repeats=1, rng_seed=0, c_grid=[0.1, 10.0])
        assert set(report.chosen_c) <= {0.1, 10.0}
        assert sum(report.chosen_c.values()) == report.folds
