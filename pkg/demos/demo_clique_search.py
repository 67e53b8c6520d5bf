"""Find large (weighted) cliques starting from sampler seeds.

Runs the shrink/grow/swap clique search on a random graph, then the
weighted variant where node weights steer the search toward heavy cliques
via the weighted adjacency encoding.
"""

import numpy as np

from tgbs import (
    NodeSubset,
    assign_uniform_weights,
    erdos_renyi,
    is_clique,
    max_clique_search,
    max_weighted_clique_search,
    sample_graph,
    weighted_encode,
)

g = erdos_renyi(60, 0.5, rng_seed=4)
samples = sample_graph(g, 20, rng_seed=9, nbar=10.0)
best = None
for row in samples.clicks:
    if row.sum() < 1:
        continue
    res = max_clique_search(g, NodeSubset.from_mask(row.astype(bool)), rng_seed=0)
    if best is None or res.score > best.score:
        best = res
print(f"best clique: size {int(best.score)}, members {best.subset.members}")
print(f"verified clique: {is_clique(g, best.subset)}")

# weighted variant: encode weights into the sampled matrix, search for weight
gw = assign_uniform_weights(g, rng_seed=8)
encoded = weighted_encode(gw, alpha=1.0)
sw = sample_graph(gw, 20, rng_seed=10, nbar=10.0, encoded=encoded)
best_w = None
for row in sw.clicks:
    if row.sum() < 1:
        continue
    res = max_weighted_clique_search(gw, NodeSubset.from_mask(row.astype(bool)), rng_seed=0)
    if best_w is None or res.score > best_w.score:
        best_w = res
print(f"\nbest weighted clique: total weight {best_w.score:.3f}, "
      f"size {len(best_w.subset)}")
