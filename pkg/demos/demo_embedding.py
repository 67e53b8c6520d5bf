"""Embed a graph into a squeezed-light sampler configuration.

Walks through the three embedding steps on a small graph: symmetric
decomposition of the adjacency matrix, rescaling to a target mean photon
number, and the resulting per-mode squeezing parameters.
"""

import numpy as np

from tgbs import embed, erdos_renyi, mean_photon_number, takagi_decompose

g = erdos_renyi(8, 0.5, rng_seed=1)
print(f"graph: {g.node_count} nodes, {g.edge_count()} edges")

factors = takagi_decompose(g.adjacency)
print(f"singular values (descending): {np.round(factors.lambdas, 3)}")
print(f"reconstruction error: {np.abs(factors.reconstruct() - g.adjacency).max():.2e}")

problem = embed(g.adjacency, nbar_target=5.0)
print(f"\nscale c = {problem.scale:.4f}")
print(f"squeezing parameters r = {np.round(problem.squeeze, 3)}")
print(f"mean photon number = {mean_photon_number(problem.squeeze):.6f} (target 5)")
