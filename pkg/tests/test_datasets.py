import os

import numpy as np
import pytest

from tgbs.datasets import DatasetFormatError, filter_by_size, parse_tudataset
from tgbs.graphs import NodeSubset, is_clique


def write_dataset(directory, name, edges, indicator, labels):
    """Write the three mandatory files; edges are 1-indexed global pairs."""
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, f"{name}_A.txt"), "w") as fh:
        fh.writelines(f"{u}, {v}\n" for u, v in edges)
    with open(os.path.join(directory, f"{name}_graph_indicator.txt"), "w") as fh:
        fh.writelines(f"{g}\n" for g in indicator)
    with open(os.path.join(directory, f"{name}_graph_labels.txt"), "w") as fh:
        fh.writelines(f"{lbl}\n" for lbl in labels)


def two_triangle_files(directory):
    edges = [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2),
             (4, 5), (5, 4), (4, 6), (6, 4), (5, 6), (6, 5)]
    write_dataset(directory, "toy", edges, [1, 1, 1, 2, 2, 2], [1, -1])


class TestParse:
    def test_two_triangles(self, tmp_path):
        two_triangle_files(tmp_path)
        ds = parse_tudataset(tmp_path, "toy")
        assert len(ds) == 2
        assert ds.labels == [0, 1]
        for g in ds.graphs:
            assert g.node_count == 3
            assert is_clique(g, NodeSubset((0, 1, 2)))

    def test_single_node_graph(self, tmp_path):
        write_dataset(tmp_path, "one", [], [1], [7])
        ds = parse_tudataset(tmp_path, "one")
        assert len(ds) == 1
        assert ds.graphs[0].node_count == 1
        assert ds.labels == [0]

    def test_unpaired_direction_accepted(self, tmp_path):
        write_dataset(tmp_path, "half", [(1, 2)], [1, 1], [0])
        g = parse_tudataset(tmp_path, "half").graphs[0]
        assert g.adjacency[0, 1] == g.adjacency[1, 0] == 1.0

    def test_edge_order_insensitive(self, tmp_path):
        write_dataset(tmp_path, "a", [(1, 2), (2, 3)], [1, 1, 1], [0])
        write_dataset(tmp_path / "b", "a", [(2, 3), (1, 2)], [1, 1, 1], [0])
        ga = parse_tudataset(tmp_path, "a").graphs[0]
        gb = parse_tudataset(tmp_path / "b", "a").graphs[0]
        assert np.array_equal(ga.adjacency, gb.adjacency)

    def test_self_loop_dropped(self, tmp_path):
        write_dataset(tmp_path, "loop", [(1, 1), (1, 2)], [1, 1], [0])
        g = parse_tudataset(tmp_path, "loop").graphs[0]
        assert np.all(np.diag(g.adjacency) == 0)
        assert g.edge_count() == 1

    def test_label_remapping_first_occurrence(self, tmp_path):
        write_dataset(tmp_path, "lbl", [], [1, 2, 3], [5, -3, 5])
        assert parse_tudataset(tmp_path, "lbl").labels == [0, 1, 0]

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            parse_tudataset(tmp_path, "nope")

    def test_cross_partition_edge(self, tmp_path):
        write_dataset(tmp_path, "bad", [(1, 2)], [1, 2], [0, 1])
        with pytest.raises(DatasetFormatError):
            parse_tudataset(tmp_path, "bad")

    def test_non_integer_token(self, tmp_path):
        write_dataset(tmp_path, "txt", [], [1], [0])
        with open(tmp_path / "txt_graph_labels.txt", "w") as fh:
            fh.write("banana\n")
        with pytest.raises(DatasetFormatError):
            parse_tudataset(tmp_path, "txt")

    def test_bad_edge_line(self, tmp_path):
        write_dataset(tmp_path, "edge", [], [1], [0])
        with open(tmp_path / "edge_A.txt", "w") as fh:
            fh.write("1 2\n")  # space-separated, not comma
        with pytest.raises(DatasetFormatError):
            parse_tudataset(tmp_path, "edge")


class TestFilterBySize:
    def test_identity_filter(self, tmp_path):
        two_triangle_files(tmp_path)
        ds = parse_tudataset(tmp_path, "toy")
        same = filter_by_size(ds, 1, 10**6)
        assert len(same) == len(ds) and same.labels == ds.labels

    def test_drops_small_graphs(self, tmp_path):
        edges = [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]  # K5
        edges += [(i, j) for i in range(6, 16) for j in range(i + 1, 16)]  # K10
        indicator = [1] * 5 + [2] * 10
        write_dataset(tmp_path, "two", edges, indicator, [0, 1])
        kept = filter_by_size(parse_tudataset(tmp_path, "two"), 6, 25)
        assert len(kept) == 1
        assert kept.graphs[0].node_count == 10
        assert kept.labels == [1]  # labels not remapped by the filter

    def test_empty_result(self, tmp_path):
        two_triangle_files(tmp_path)
        with pytest.raises(ValueError):
            filter_by_size(parse_tudataset(tmp_path, "toy"), 10, 20)

    def test_bad_range(self, tmp_path):
        two_triangle_files(tmp_path)
        with pytest.raises(ValueError):
            filter_by_size(parse_tudataset(tmp_path, "toy"), 5, 4)


MUTAG_DIR = os.environ.get("TGBS_DATASET_DIR", "data")


@pytest.mark.skipif(
    not os.path.exists(os.path.join(MUTAG_DIR, "MUTAG", "MUTAG_A.txt")),
    reason="MUTAG dataset files not present",
)
def test_mutag_counts():
    ds = parse_tudataset(os.path.join(MUTAG_DIR, "MUTAG"), "MUTAG")
    assert len(ds) == 188
    assert ds.n_classes == 2
    kept = filter_by_size(ds, 6, 25)
    assert all(6 <= g.node_count <= 25 for g in kept.graphs)
