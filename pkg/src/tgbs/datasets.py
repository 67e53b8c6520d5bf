"""Parser for the plain-text multi-graph benchmark layout (TUDataset style).

A dataset directory holds ``<name>_A.txt`` (comma-separated edge pairs over
1-indexed global node ids), ``<name>_graph_indicator.txt`` (graph id per
node) and ``<name>_graph_labels.txt`` (label per graph). Node and edge
attributes are ignored.
"""

from __future__ import annotations

import dataclasses
import logging
import os

import numpy as np

from .graphs import Graph

__all__ = ["DatasetFormatError", "LabeledDataset", "parse_tudataset", "filter_by_size"]

log = logging.getLogger(__name__)


class DatasetFormatError(ValueError):
    """Malformed dataset file contents."""


@dataclasses.dataclass(frozen=True)
class LabeledDataset:
    graphs: list[Graph]
    labels: list[int]
    name: str

    def __post_init__(self):
        if len(self.graphs) != len(self.labels):
            raise ValueError("graphs and labels must have the same length")

    def __len__(self) -> int:
        return len(self.graphs)

    @property
    def n_classes(self) -> int:
        return len(set(self.labels))


def _read_int_lines(path) -> list[int]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(int(line))
            except ValueError as exc:
                raise DatasetFormatError(f"{path}:{lineno}: not an integer: {line!r}") from exc
    return out


def parse_tudataset(directory, name: str) -> LabeledDataset:
    """Load one dataset; raw class labels are remapped to 0..K-1 in
    first-occurrence order. Self-loops are dropped (counted in a warning)."""
    paths = {
        key: os.path.join(directory, f"{name}_{key}.txt")
        for key in ("A", "graph_indicator", "graph_labels")
    }
    for path in paths.values():
        if not os.path.exists(path):
            raise FileNotFoundError(path)

    indicator = _read_int_lines(paths["graph_indicator"])
    raw_labels = _read_int_lines(paths["graph_labels"])
    n_graphs = len(raw_labels)
    if indicator and (min(indicator) < 1 or max(indicator) > n_graphs):
        raise DatasetFormatError("graph indicator references an unknown graph id")

    # global node id (1-indexed) -> (graph index, local node index)
    node_graph = np.array(indicator, dtype=int) - 1
    local_index = np.zeros(len(indicator), dtype=int)
    sizes = np.zeros(n_graphs, dtype=int)
    for node, gi in enumerate(node_graph):
        local_index[node] = sizes[gi]
        sizes[gi] += 1
    if np.any(sizes == 0):
        raise DatasetFormatError("every graph must have at least one node")

    adjacencies = [np.zeros((s, s)) for s in sizes]
    self_loops = 0
    with open(paths["A"]) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                u_str, v_str = line.split(",")
                u, v = int(u_str), int(v_str)
            except ValueError as exc:
                raise DatasetFormatError(f"{paths['A']}:{lineno}: bad edge line {line!r}") from exc
            if not (1 <= u <= len(indicator) and 1 <= v <= len(indicator)):
                raise DatasetFormatError(f"{paths['A']}:{lineno}: node id out of range")
            if u == v:
                self_loops += 1
                continue
            gu, gv = node_graph[u - 1], node_graph[v - 1]
            if gu != gv:
                raise DatasetFormatError(
                    f"{paths['A']}:{lineno}: edge crosses graph partitions ({u}, {v})"
                )
            a, b = local_index[u - 1], local_index[v - 1]
            adjacencies[gu][a, b] = adjacencies[gu][b, a] = 1.0
    if self_loops:
        log.warning("%s: dropped %d self-loop(s)", name, self_loops)

    remap: dict[int, int] = {}
    labels = []
    for raw in raw_labels:
        if raw not in remap:
            remap[raw] = len(remap)
        labels.append(remap[raw])
    return LabeledDataset([Graph(a) for a in adjacencies], labels, name)


def filter_by_size(dataset: LabeledDataset, min_nodes: int, max_nodes: int) -> LabeledDataset:
    """Keep graphs with min_nodes <= M <= max_nodes; labels are untouched
    (no remapping) so classes stay comparable across filters."""
    if min_nodes > max_nodes:
        raise ValueError("min_nodes must not exceed max_nodes")
    kept = [
        (g, lbl)
        for g, lbl in zip(dataset.graphs, dataset.labels)
        if min_nodes <= g.node_count <= max_nodes
    ]
    if not kept:
        raise ValueError("size filter removed every graph")
    graphs, labels = zip(*kept)
    return LabeledDataset(list(graphs), list(labels), dataset.name)
