"""Turn sampler statistics into graph feature vectors and a kernel matrix.

Featurizes a tiny labeled dataset with count binning, builds the RBF Gram
matrix, and shows that isomorphic graphs land close together while a
different graph stands apart.
"""

import numpy as np

from tgbs import (
    Binning,
    LabeledDataset,
    default_bandwidth,
    featurize_dataset,
    Graph,
    rbf_gram,
)

triangle = Graph(np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=float))
path = Graph(np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float))
ds = LabeledDataset([triangle, triangle, path], [0, 0, 1], "toy")

feats, labels, skipped = featurize_dataset(
    ds, nbar=5.0, gamma=1.0, n_samples=6000, binning=Binning.COUNT, rng_seed=0
)
for i, fv in enumerate(feats):
    print(f"graph {i} (label {labels[i]}): {np.round(fv.values, 3)}")

gram = rbf_gram(feats, default_bandwidth(feats))
print(f"\nGram matrix (bandwidth {gram.bandwidth:.4f}):")
print(np.round(gram.values, 3))
print("\nthe two triangles are nearly identical in kernel space;")
print("the path graph is farther from both.")
