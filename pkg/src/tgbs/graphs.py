"""Graph container, random-graph generators, and density/clique metrics.

Graphs are stored as dense symmetric adjacency matrices with zero diagonal.
Edge weights are allowed in the representation, but the density and degree
metrics only look at edge presence. Node weights are an optional separate
vector used by the weighted clique problem.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable

import numpy as np

__all__ = [
    "Graph",
    "NodeSubset",
    "erdos_renyi",
    "planted_graph",
    "assign_uniform_weights",
    "density",
    "is_clique",
    "subgraph_degree",
    "save_graph",
    "load_graph",
]


@dataclasses.dataclass(frozen=True)
class Graph:
    """Undirected graph: symmetric adjacency matrix plus optional node weights."""

    adjacency: np.ndarray
    node_weights: np.ndarray | None = None

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=float)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if adj.shape[0] < 1:
            raise ValueError("graph needs at least one node")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be exactly symmetric")
        if np.any(np.diagonal(adj) != 0):
            raise ValueError("adjacency diagonal must be zero")
        if np.any(adj < 0):
            raise ValueError("edge weights must be non-negative")
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)
        if self.node_weights is not None:
            w = np.asarray(self.node_weights, dtype=float)
            if w.shape != (adj.shape[0],):
                raise ValueError("node_weights must have one entry per node")
            if np.any(w < 0):
                raise ValueError("node weights must be non-negative")
            w.flags.writeable = False
            object.__setattr__(self, "node_weights", w)

    @property
    def node_count(self) -> int:
        return self.adjacency.shape[0]

    def edge_mask(self) -> np.ndarray:
        """Boolean adjacency (edge presence, weights ignored)."""
        return self.adjacency > 0

    def degrees(self) -> np.ndarray:
        """Unweighted node degrees."""
        return self.edge_mask().sum(axis=1)

    def edge_count(self) -> int:
        return int(self.edge_mask().sum()) // 2


@dataclasses.dataclass(frozen=True)
class NodeSubset:
    """Sorted, duplicate-free set of node indices identifying a subgraph."""

    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(int(v) for v in self.members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError("members must be strictly increasing")
        if members and members[0] < 0:
            raise ValueError("node indices must be non-negative")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_iterable(cls, nodes: Iterable[int]) -> "NodeSubset":
        return cls(tuple(sorted({int(v) for v in nodes})))

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "NodeSubset":
        return cls(tuple(int(v) for v in np.flatnonzero(mask)))

    def to_array(self) -> np.ndarray:
        return np.array(self.members, dtype=int)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in set(self.members)


def _check_subset(g: Graph, s: NodeSubset) -> np.ndarray:
    idx = s.to_array()
    if len(idx) and idx[-1] >= g.node_count:
        raise ValueError("subset references a node outside the graph")
    return idx


def erdos_renyi(n: int, p: float, rng_seed: int) -> Graph:
    """Erdős–Rényi G(n, p) graph with unit edge weights, deterministic per seed."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = np.random.default_rng(rng_seed)
    adj = np.zeros((n, n))
    for i in range(n - 1):
        row = (rng.random(n - i - 1) < p).astype(float)
        adj[i, i + 1 :] = row
        adj[i + 1 :, i] = row
    return Graph(adj)


def planted_graph(
    n_total: int,
    p_dense: float,
    p_sparse: float,
    dense_fraction: float,
    rng_seed: int,
) -> tuple[Graph, NodeSubset]:
    """Dense Erdős–Rényi block planted inside a sparser background graph.

    A block of ``round(dense_fraction * n_total)`` nodes gets internal edge
    probability ``p_dense``; all remaining pairs, including cross pairs, get
    an edge with probability ``p_sparse``. Node labels are shuffled so the
    block's position carries no information (index-based tie-breaking in the
    solvers must not be able to find it for free).
    Returns the graph and the planted block.
    """
    if not 0.0 < dense_fraction < 1.0:
        raise ValueError("dense_fraction must lie strictly in (0, 1)")
    if p_dense <= p_sparse:
        raise ValueError("p_dense must exceed p_sparse")
    n_dense = int(round(dense_fraction * n_total))
    if n_dense < 2:
        raise ValueError("planted block must have at least 2 nodes")
    rng = np.random.default_rng(rng_seed)
    adj = np.zeros((n_total, n_total))
    for i in range(n_total - 1):
        p_row = np.full(n_total - i - 1, p_sparse)
        if i < n_dense:
            p_row[: max(0, n_dense - i - 1)] = p_dense
        row = (rng.random(n_total - i - 1) < p_row).astype(float)
        adj[i, i + 1 :] = row
        adj[i + 1 :, i] = row
    perm = rng.permutation(n_total)
    adj = adj[np.ix_(perm, perm)]
    planted = NodeSubset.from_mask(perm < n_dense)
    return Graph(adj), planted


def assign_uniform_weights(g: Graph, rng_seed: int) -> Graph:
    """Copy of ``g`` with i.i.d. uniform [0, 1) node weights."""
    rng = np.random.default_rng(rng_seed)
    return Graph(g.adjacency, rng.random(g.node_count))


def density(g: Graph, s: NodeSubset) -> float:
    """Edge density 2e / (k(k-1)) of the induced subgraph (edge presence only)."""
    idx = _check_subset(g, s)
    k = len(idx)
    if k < 2:
        raise ValueError("density requires a subset of at least 2 nodes")
    edges = int(g.edge_mask()[np.ix_(idx, idx)].sum()) // 2
    return 2.0 * edges / (k * (k - 1))


def is_clique(g: Graph, s: NodeSubset) -> bool:
    """True iff every pair of subset nodes is adjacent (singletons count)."""
    idx = _check_subset(g, s)
    if len(idx) == 0:
        raise ValueError("is_clique requires a non-empty subset")
    if len(idx) == 1:
        return True
    sub = g.edge_mask()[np.ix_(idx, idx)]
    return bool(sub.sum() == len(idx) * (len(idx) - 1))


def subgraph_degree(g: Graph, s: NodeSubset, v: int) -> int:
    """Number of neighbors of ``v`` inside ``s`` (``v`` itself excluded)."""
    idx = _check_subset(g, s)
    if not 0 <= v < g.node_count:
        raise ValueError("node index out of range")
    # the diagonal is zero, so v's own column contributes nothing when v is in s
    return int(g.edge_mask()[v, idx].sum())


def save_graph(g: Graph, path) -> None:
    """Write the edge-list text format: header ``M``, ``u v [w]`` lines, then
    an optional ``# weights`` block with one node weight per line."""
    lines = [str(g.node_count)]
    rows, cols = np.nonzero(np.triu(g.adjacency))
    for u, v in zip(rows, cols):
        w = float(g.adjacency[u, v])
        if w == 1.0:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {w!r}")
    if g.node_weights is not None:
        lines.append("# weights")
        lines.extend(repr(float(w)) for w in g.node_weights)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_graph(path) -> Graph:
    """Read the edge-list format written by :func:`save_graph`."""
    with open(path) as fh:
        raw = [ln.strip() for ln in fh if ln.strip()]
    if not raw:
        raise ValueError(f"{path}: empty graph file")
    n = int(raw[0])
    adj = np.zeros((n, n))
    weights = None
    it = iter(raw[1:])
    for line in it:
        if line == "# weights":
            weights = np.array([float(next(it)) for _ in range(n)])
            break
        parts = line.split()
        u, v = int(parts[0]), int(parts[1])
        w = float(parts[2]) if len(parts) > 2 else 1.0
        adj[u, v] = adj[v, u] = w
    return Graph(adj, weights)
