import numpy as np
import pytest

from svm_harness.cli import build_parser, main

from conftest import write_features, write_gram


def blob_features(rng_seed=0):
    rng = np.random.default_rng(rng_seed)
    values = np.vstack([rng.normal(0, 0.3, (15, 3)), rng.normal(4, 0.3, (15, 3))])
    labels = [0] * 15 + [1] * 15
    return values, labels


class TestMain:
    def test_features_run(self, tmp_path, capsys):
        values, labels = blob_features()
        path = tmp_path / "features.csv"
        write_features(path, values, labels, {"dataset": "blobs", "binning": "count"})
        out_csv = tmp_path / "report.csv"
        rc = main([str(path), "--repeats", "1", "--output", str(out_csv)])
        assert rc == 0
        assert "blobs" in capsys.readouterr().out
        assert out_csv.exists()

    def test_gram_run(self, tmp_path):
        values, labels = blob_features()
        sq = np.sum(values**2, axis=1)
        gram = np.exp(-(sq[:, None] + sq[None, :] - 2 * values @ values.T) / 2.0)
        gram = (gram + gram.T) / 2
        path = tmp_path / "gram.csv"
        write_gram(path, gram, labels, {"dataset": "blobs", "binning": "count"})
        rc = main([str(path), "--repeats", "1", "--output", str(tmp_path / "r.csv")])
        assert rc == 0

    def test_all_inputs_failing_exits_nonzero(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("not,a,schema\n")
        rc = main([str(bad), "--output", str(tmp_path / "r.csv")])
        assert rc == 1

    def test_missing_input_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([])
        assert exc.value.code == 2
