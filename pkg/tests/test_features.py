import numpy as np
import pytest

from tgbs.datasets import LabeledDataset
from tgbs.features import (
    Binning,
    FeatureVector,
    balanced_accuracy,
    count_binning,
    default_bandwidth,
    detector_binning,
    featurize_dataset,
    rbf_gram,
)
from tgbs.graphs import Graph, erdos_renyi
from tgbs.sampler import SampleBatch, sample_graph

from conftest import graph_from_edges


def batch_of(rows):
    return SampleBatch(np.array(rows, dtype=np.uint8))


class TestCountBinning:
    def test_all_zero_rows(self):
        fv = count_binning(batch_of([[0, 0, 0]] * 4), pad_to=3)
        assert np.array_equal(fv.values, [1.0, 0, 0, 0])

    def test_hand_histogram(self):
        fv = count_binning(
            batch_of([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0]]), pad_to=4
        )
        assert np.array_equal(fv.values, [0.0, 0.5, 0.25, 0.25, 0.0])

    def test_probability_vector(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            clicks = (rng.random((50, 8)) < 0.3).astype(np.uint8)
            fv = count_binning(SampleBatch(clicks), pad_to=12)
            assert fv.values.sum() == pytest.approx(1.0)
            assert np.all(fv.values >= 0)
            assert fv.values.size == 13

    def test_cumulative_variant(self):
        fv = count_binning(batch_of([[1, 0], [1, 1]]), pad_to=2, cumulative=True)
        assert np.array_equal(fv.values, [0.0, 0.5, 1.0])

    def test_pad_too_small(self):
        with pytest.raises(ValueError):
            count_binning(batch_of([[1, 0, 1]]), pad_to=2)


class TestDetectorBinning:
    def test_no_clicks(self):
        fv = detector_binning(batch_of([[0, 0, 0]] * 5), pad_to=4)
        assert np.array_equal(fv.values, np.zeros(4))

    def test_hand_frequencies_unsorted(self):
        fv = detector_binning(
            batch_of([[1, 0, 1], [1, 1, 0]]), pad_to=3, sort_descending=False
        )
        assert np.array_equal(fv.values, [1.0, 0.5, 0.5])

    def test_sorted_padding(self):
        fv = detector_binning(batch_of([[0, 1], [0, 1]]), pad_to=4)
        assert np.array_equal(fv.values, [1.0, 0.0, 0.0, 0.0])

    def test_sorted_invariant_under_relabeling(self):
        g = erdos_renyi(10, 0.5, 3)
        perm = np.random.default_rng(0).permutation(10)
        gp = Graph(g.adjacency[np.ix_(perm, perm)])
        n = 6000
        fa = detector_binning(sample_graph(g, n, 1, nbar=3.0), pad_to=10)
        fb = detector_binning(sample_graph(gp, n, 2, nbar=3.0), pad_to=10)
        # Monte-Carlo l1 bound: sum of 4x per-mode binomial standard errors
        p = (fa.values + fb.values) / 2
        bound = 4 * np.sum(np.sqrt(2 * p * (1 - p) / n)) + 1e-9
        assert np.abs(fa.values - fb.values).sum() < bound


class TestRbfGram:
    def test_unit_diagonal(self):
        feats = [
            FeatureVector(np.array([0.2, 0.8]), Binning.COUNT, 10),
            FeatureVector(np.array([0.5, 0.5]), Binning.COUNT, 10),
        ]
        gram = rbf_gram(feats, bandwidth=1.0)
        assert np.allclose(np.diag(gram.values), 1.0)
        assert np.array_equal(gram.values, gram.values.T)

    def test_hand_value(self):
        feats = [
            FeatureVector(np.array([1.0, 0.0]), Binning.COUNT, 1),
            FeatureVector(np.array([0.0, 1.0]), Binning.COUNT, 1),
        ]
        gram = rbf_gram(feats, bandwidth=1.0)
        assert gram.values[0, 1] == pytest.approx(np.exp(-1.0))

    def test_positive_semidefinite(self):
        rng = np.random.default_rng(2)
        feats = [FeatureVector(rng.random(6), Binning.COUNT, 1) for _ in range(40)]
        gram = rbf_gram(feats, bandwidth=0.7)
        assert np.linalg.eigvalsh(gram.values).min() >= -1e-8

    def test_length_mismatch(self):
        feats = [
            FeatureVector(np.array([1.0]), Binning.COUNT, 1),
            FeatureVector(np.array([1.0, 0.0]), Binning.COUNT, 1),
        ]
        with pytest.raises(ValueError):
            rbf_gram(feats, bandwidth=1.0)

    def test_bandwidth_validation(self):
        with pytest.raises(ValueError):
            rbf_gram([FeatureVector(np.array([1.0]), Binning.COUNT, 1)], bandwidth=0.0)

    def test_default_bandwidth_positive(self):
        rng = np.random.default_rng(3)
        feats = [FeatureVector(rng.random(5), Binning.COUNT, 1) for _ in range(4)]
        assert default_bandwidth(feats) > 0


class TestBalancedAccuracy:
    def test_perfect(self):
        assert balanced_accuracy([0, 1, 1], [0, 1, 1], 2) == 1.0

    def test_constant_prediction_balanced_binary(self):
        assert balanced_accuracy([0, 0, 0, 0], [0, 0, 1, 1], 2) == 0.5

    def test_hand_value(self):
        assert balanced_accuracy([0, 1, 1, 1, 0], [0, 0, 1, 1, 1], 2) == pytest.approx(7 / 12)

    def test_absent_class(self):
        with pytest.raises(ValueError):
            balanced_accuracy([0, 0], [0, 0], 2)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            balanced_accuracy([0], [0, 1], 2)


class TestFeaturizeDataset:
    def make_dataset(self, graphs, labels):
        return LabeledDataset(graphs, labels, "fixture")

    def test_identical_graphs_close_features(self, triangle):
        ds = self.make_dataset([triangle, triangle], [0, 1])
        feats, labels, skipped = featurize_dataset(
            ds, nbar=5.0, gamma=1.0, n_samples=6000, binning=Binning.COUNT, rng_seed=1
        )
        assert labels == [0, 1] and skipped == []
        assert np.abs(feats[0].values - feats[1].values).sum() < 0.05

    def test_edgeless_graph_skipped(self, triangle):
        edgeless = Graph(np.zeros((3, 3)))
        ds = self.make_dataset([triangle, edgeless], [0, 1])
        feats, labels, skipped = featurize_dataset(
            ds, nbar=2.0, gamma=1.0, n_samples=100, binning=Binning.DETECTOR, rng_seed=2
        )
        assert len(feats) + len(skipped) == len(ds.graphs)
        assert skipped == [1]

    def test_padding_to_dataset_max(self, triangle, k4):
        ds = self.make_dataset([triangle, k4], [0, 1])
        feats, _, _ = featurize_dataset(
            ds, nbar=2.0, gamma=1.0, n_samples=200, binning=Binning.DETECTOR, rng_seed=3
        )
        assert all(f.values.size == 4 for f in feats)

    def test_deterministic(self, triangle, k4):
        ds = self.make_dataset([triangle, k4], [0, 1])
        kwargs = dict(nbar=2.0, gamma=1.0, n_samples=300, binning=Binning.COUNT, rng_seed=4)
        a, _, _ = featurize_dataset(ds, **kwargs)
        b, _, _ = featurize_dataset(ds, **kwargs)
        for fa, fb in zip(a, b):
            assert np.array_equal(fa.values, fb.values)
