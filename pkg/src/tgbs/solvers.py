"""Seed-and-search heuristics for densest-k-subgraph and (weighted) max clique.

Every solver starts from a seed subset that comes from one of four strategies:
a sampler click pattern, a random single node, J random nodes (J = mean
sampled subgraph size), or the whole graph (greedy peeling). Ties are always
broken toward the lowest node index so runs are reproducible.
"""

from __future__ import annotations

import dataclasses
import enum
import time

import numpy as np

from .graphs import Graph, NodeSubset, density, is_clique
from .sampler import SampleBatch

__all__ = [
    "EmptySeedError",
    "StrategyKind",
    "SeedStrategy",
    "ClickSeedSupply",
    "SearchResult",
    "make_seed",
    "densest_k_search",
    "max_clique_search",
    "max_weighted_clique_search",
]


class EmptySeedError(RuntimeError):
    """No usable (non-empty) click pattern is available for seeding."""


class StrategyKind(enum.Enum):
    GBS_SAMPLE = "gbs"
    RANDOM_SINGLE_NODE = "random-single"
    RANDOM_J_NODE = "random-j"
    GREEDY_PEELING = "greedy-peeling"


@dataclasses.dataclass(frozen=True)
class SeedStrategy:
    kind: StrategyKind
    j_nodes: int | None = None  # only used by RANDOM_J_NODE; derived when None

    def __post_init__(self):
        if self.j_nodes is not None and self.j_nodes < 1:
            raise ValueError("j_nodes must be at least 1")


class ClickSeedSupply:
    """Hands out click patterns of a sample batch in order, skipping empty rows."""

    def __init__(self, batch: SampleBatch):
        self._clicks = batch.clicks
        self._cursor = 0

    def take(self) -> NodeSubset:
        while self._cursor < self._clicks.shape[0]:
            row = self._clicks[self._cursor]
            self._cursor += 1
            if row.any():
                return NodeSubset.from_mask(row.astype(bool))
        raise EmptySeedError("sample batch exhausted without a non-empty click row")


@dataclasses.dataclass(frozen=True)
class SearchResult:
    subset: NodeSubset
    score: float
    seed_subset: NodeSubset
    iterations: int
    search_seconds: float
    seed_seconds: float = 0.0
    decompose_seconds: float = 0.0
    pruned: bool = False


def mean_click_count(batch: SampleBatch) -> int:
    """Rounded mean number of clicks per realization, at least 1."""
    return max(1, int(round(float(batch.click_counts().mean()))))


def make_seed(
    g: Graph,
    strategy: SeedStrategy,
    samples: SampleBatch | ClickSeedSupply | None = None,
    rng_seed: int = 0,
) -> NodeSubset:
    """Build a seed subset for one search run.

    For the sampler strategy, pass a :class:`ClickSeedSupply` to consume
    successive realizations across restarts; a plain batch always yields its
    first non-empty row.
    """
    rng = np.random.default_rng(rng_seed)
    m = g.node_count
    if strategy.kind is StrategyKind.GBS_SAMPLE:
        if samples is None:
            raise ValueError("sampler strategy needs a sample batch")
        supply = samples if isinstance(samples, ClickSeedSupply) else ClickSeedSupply(samples)
        return supply.take()
    if strategy.kind is StrategyKind.RANDOM_SINGLE_NODE:
        return NodeSubset((int(rng.integers(m)),))
    if strategy.kind is StrategyKind.RANDOM_J_NODE:
        j = strategy.j_nodes
        if j is None:
            if samples is None:
                raise ValueError("random-J strategy needs samples to derive J")
            clicks = samples._clicks if isinstance(samples, ClickSeedSupply) else samples.clicks
            j = max(1, int(round(float(clicks.sum(axis=1).mean()))))
        j = min(j, m)
        return NodeSubset.from_iterable(rng.choice(m, size=j, replace=False))
    if strategy.kind is StrategyKind.GREEDY_PEELING:
        return NodeSubset(tuple(range(m)))
    raise ValueError(f"unknown strategy {strategy.kind}")


class _SubsetState:
    """Boolean membership mask with incrementally maintained into-subset degrees."""

    def __init__(self, g: Graph, seed: NodeSubset):
        self.mask = g.edge_mask()
        self.m = g.node_count
        self.in_s = np.zeros(self.m, dtype=bool)
        idx = seed.to_array()
        if len(idx) and idx[-1] >= self.m:
            raise ValueError("seed references a node outside the graph")
        self.in_s[idx] = True
        # deg[v] = number of neighbors of v inside the current subset
        self.deg = self.mask[:, self.in_s].sum(axis=1).astype(np.int64)

    @property
    def size(self) -> int:
        return int(self.in_s.sum())

    def add(self, v: int) -> None:
        self.in_s[v] = True
        self.deg += self.mask[v]

    def remove(self, v: int) -> None:
        self.in_s[v] = False
        self.deg -= self.mask[v]

    def subset(self) -> NodeSubset:
        return NodeSubset.from_mask(self.in_s)

    def is_clique(self) -> bool:
        size = self.size
        return size <= 1 or int(self.deg[self.in_s].min()) == size - 1


def densest_k_search(g: Graph, seed: NodeSubset, k: int) -> SearchResult:
    """Grow/peel a seed to exactly k nodes, maximizing internal edges greedily.

    Below k, the node outside the subset with the most edges into it is added;
    above k, the member with the fewest internal edges is removed. If the
    subset has no outside neighbor before reaching k, the run is pruned and
    the best-effort subset is returned.
    """
    if len(seed) == 0:
        raise ValueError("seed must be non-empty")
    if not 1 <= k <= g.node_count:
        raise ValueError("k must lie in [1, node_count]")
    t0 = time.perf_counter()
    state = _SubsetState(g, seed)
    iterations = 0
    pruned = False
    while state.size != k:
        if state.size < k:
            candidates = ~state.in_s & (state.deg > 0)
            if not candidates.any():
                pruned = True
                break
            # argmax over candidates; argmax picks the lowest index on ties
            v = int(np.argmax(np.where(candidates, state.deg, -1)))
            state.add(v)
        else:
            v = int(np.argmin(np.where(state.in_s, state.deg, np.iinfo(np.int64).max)))
            state.remove(v)
        iterations += 1
    subset = state.subset()
    score = density(g, subset) if len(subset) >= 2 else 0.0
    return SearchResult(
        subset=subset,
        score=score,
        seed_subset=seed,
        iterations=iterations,
        search_seconds=time.perf_counter() - t0,
        pruned=pruned,
    )


def _shrink_to_clique(state: _SubsetState, weights: np.ndarray | None) -> int:
    """Remove lowest-internal-degree nodes until the subset is a clique."""
    steps = 0
    big = np.iinfo(np.int64).max
    while not state.is_clique():
        key = np.where(state.in_s, state.deg, big).astype(float)
        if weights is not None:
            # lexicographic (degree, weight): scale weights below 1 so they only split ties
            frac = weights / (weights.max() + 1.0)
            key = key + np.where(state.in_s, frac, 0.0)
        state.remove(int(np.argmin(key)))
        steps += 1
    return steps


def _grow_clique(state: _SubsetState, full_degree: np.ndarray, weights: np.ndarray | None) -> int:
    """Add outside nodes connected to the whole clique until none remain."""
    steps = 0
    while True:
        eligible = ~state.in_s & (state.deg == state.size)
        if not eligible.any():
            return steps
        pref = weights if weights is not None else full_degree
        state.add(int(np.argmax(np.where(eligible, pref, -1.0))))
        steps += 1


def _swap_clique(
    state: _SubsetState,
    rng: np.random.Generator,
    weights: np.ndarray | None,
) -> bool:
    """Swap a random clique node for an outside node adjacent to the rest."""
    members = np.flatnonzero(state.in_s)
    if len(members) == 0:
        return False
    v = int(rng.choice(members))
    candidates = ~state.in_s & (state.deg == state.size - 1) & ~state.mask[v]
    if weights is not None:
        candidates &= weights >= weights[v]  # never decrease the clique weight
    cand_idx = np.flatnonzero(candidates)
    if len(cand_idx) == 0:
        return False
    if weights is not None:
        u = int(cand_idx[np.argmax(weights[cand_idx])])
    else:
        u = int(rng.choice(cand_idx))
    state.remove(v)
    state.add(u)
    return True


def _clique_search(
    g: Graph,
    seed: NodeSubset,
    cycles: int,
    rng_seed: int,
    weights: np.ndarray | None,
    patience: int = 10,
) -> SearchResult:
    if len(seed) == 0:
        raise ValueError("seed must be non-empty")
    if cycles < 1:
        raise ValueError("cycles must be at least 1")
    rng = np.random.default_rng(rng_seed)
    t0 = time.perf_counter()
    state = _SubsetState(g, seed)
    full_degree = g.degrees().astype(float)

    def score_of(mask: np.ndarray) -> float:
        if weights is None:
            return float(mask.sum())
        return float(weights[mask].sum())

    iterations = _shrink_to_clique(state, weights)
    iterations += _grow_clique(state, full_degree, weights)
    best_mask = state.in_s.copy()
    best_score = score_of(best_mask)
    stale = 0
    for _ in range(cycles):
        swapped = _swap_clique(state, rng, weights)
        grown = _grow_clique(state, full_degree, weights)
        iterations += 1
        score = score_of(state.in_s)
        if score > best_score:
            best_score = score
            best_mask = state.in_s.copy()
            stale = 0
        else:
            stale += 1
        if (not swapped and grown == 0) or stale >= patience:
            break
    subset = NodeSubset.from_mask(best_mask)
    assert is_clique(g, subset)
    return SearchResult(
        subset=subset,
        score=best_score,
        seed_subset=seed,
        iterations=iterations,
        search_seconds=time.perf_counter() - t0,
    )


def max_clique_search(g: Graph, seed: NodeSubset, cycles: int = 50, rng_seed: int = 0) -> SearchResult:
    """Shrink the seed to a clique, then alternate grow and swap phases.

    Score is the clique size; the largest clique seen across cycles wins.
    """
    return _clique_search(g, seed, cycles, rng_seed, weights=None)


def max_weighted_clique_search(
    g: Graph, seed: NodeSubset, cycles: int = 50, rng_seed: int = 0
) -> SearchResult:
    """Weight-aware clique search: score is the sum of member node weights.

    Shrinking prefers to drop light low-degree nodes, growth adds the
    heaviest eligible node, and swaps never decrease the total weight.
    """
    if g.node_weights is None:
        raise ValueError("weighted clique search requires node weights")
    return _clique_search(g, seed, cycles, rng_seed, weights=g.node_weights)
