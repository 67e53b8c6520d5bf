"""Command-line benchmark harness.

Subcommands: ``decompose-bench``, ``seed-density``, ``solve``, ``featurize``,
``parse-dataset``. Output files land in the directory given by ``--output-dir``
or the ``TGBS_OUTPUT_DIR`` environment variable (default: current directory).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import logging
import os
import time

import numpy as np

from . import campaign as campaign_mod
from . import features as features_mod
from .datasets import filter_by_size, parse_tudataset
from .embedding import takagi_decompose
from .graphs import NodeSubset, density, erdos_renyi
from .sampler import sample_graph, sample_problem
from .campaign import ExperimentConfig

log = logging.getLogger(__name__)

DECOMPOSE_SCHEMA = "tgbs.decompose-bench.v1"
SEED_DENSITY_SCHEMA = "tgbs.seed-density.v1"


def _out_path(args, filename: str) -> str:
    base = args.output_dir or os.environ.get("TGBS_OUTPUT_DIR", ".")
    os.makedirs(base, exist_ok=True)
    return os.path.join(base, filename)


def _write_csv(path, schema: str, header: list[str], rows: list[list], config: dict | None = None):
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema={schema}\n")
        if config is not None:
            fh.write("# config=" + json.dumps(config) + "\n")
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"wrote {path}")


def cmd_decompose_bench(args) -> int:
    """Time the matrix decomposition against the sampling stages per size."""
    rows = []
    for size in args.sizes:
        p = np.log(size) / size
        dec_times, samp_times = [], []
        try:
            # warm-up run, discarded: stabilizes small-size numbers
            g = erdos_renyi(size, p, rng_seed=args.seed)
            takagi_decompose(g.adjacency)
            for inst in range(args.instances):
                g = erdos_renyi(size, p, rng_seed=args.seed + 1 + inst)
                batch = sample_graph(
                    g, args.realizations, args.seed + 1000 + inst,
                    nbar=args.nbar, gamma=args.gamma,
                )
                dec_times.append(batch.timings["decompose"])
                samp_times.append(
                    batch.timings["generate"]
                    + batch.timings["propagate"]
                    + batch.timings["threshold"]
                )
        except MemoryError:
            log.error("size %d skipped: out of memory", size)
            continue
        rows.append(
            [
                size,
                float(np.mean(dec_times)),
                float(np.std(dec_times)),
                float(np.mean(samp_times)),
                float(np.std(samp_times)),
            ]
        )
    _write_csv(
        _out_path(args, "decompose_bench.csv"),
        DECOMPOSE_SCHEMA,
        ["size", "decompose_mean_s", "decompose_std_s", "sample_mean_s", "sample_std_s"],
        rows,
        config=vars(args) | {"func": None},
    )
    return 0


def cmd_seed_density(args) -> int:
    """Mean click-seed density vs. the random-inclusion baseline per size."""
    rows = []
    for size in args.sizes:
        p = np.log(size) / size
        gbs_densities, random_densities, click_counts = [], [], []
        per_graph = []
        for inst in range(args.instances):
            g = erdos_renyi(size, p, rng_seed=args.seed + inst)
            batch = sample_graph(
                g, args.realizations, args.seed + 5000 + inst,
                nbar=args.nbar, gamma=args.gamma,
            )
            click_counts.append(float(batch.click_counts().mean()))
            per_graph.append((g, batch))
        jbar = max(1.0, float(np.mean(click_counts)))
        rng = np.random.default_rng(args.seed + 99)
        for g, batch in per_graph:
            for row in batch.clicks:
                if row.sum() >= 2:
                    gbs_densities.append(density(g, NodeSubset.from_mask(row.astype(bool))))
            for _ in range(args.realizations):
                mask = rng.random(size) < 1.0 / jbar
                if mask.sum() >= 2:
                    random_densities.append(density(g, NodeSubset.from_mask(mask)))
        rows.append(
            [
                size,
                float(np.mean(gbs_densities)) if gbs_densities else 0.0,
                float(np.mean(random_densities)) if random_densities else 0.0,
                jbar,
            ]
        )
    _write_csv(
        _out_path(args, "seed_density.csv"),
        SEED_DENSITY_SCHEMA,
        ["size", "gbs_density", "random_density", "mean_clicks"],
        rows,
        config=vars(args) | {"func": None},
    )
    return 0


def _config_from_args(args) -> ExperimentConfig:
    if args.config:
        return ExperimentConfig.from_file(args.config)
    return ExperimentConfig(
        problem=args.problem,
        sizes=args.sizes,
        master_seed=args.seed,
        instances=args.instances,
        strategies=args.strategies,
        restarts=args.restarts,
        k=args.k,
        graph_kind=args.graph_kind,
        nbar=args.nbar,
        gamma=args.gamma,
        alpha=args.alpha,
        cycles=args.cycles,
    )


def cmd_solve(args) -> int:
    config = _config_from_args(args)
    rows = campaign_mod.run_campaign(config)
    if not rows:
        log.error("every instance failed")
        return 1
    campaign_mod.write_rows_csv(rows, _out_path(args, "solve.csv"), config)
    print(f"wrote {_out_path(args, 'solve.csv')} ({len(rows)} rows)")
    return 0


def cmd_featurize(args) -> int:
    dataset = parse_tudataset(args.dataset_dir, args.dataset_name)
    if args.min_nodes is not None or args.max_nodes is not None:
        dataset = filter_by_size(
            dataset, args.min_nodes or 1, args.max_nodes or max(g.node_count for g in dataset.graphs)
        )
    binning = features_mod.Binning(args.binning)
    t0 = time.perf_counter()
    feats, labels, skipped = features_mod.featurize_dataset(
        dataset, args.nbar, args.gamma, args.samples, binning, args.seed,
        sort_descending=not args.unsorted_detectors,
        cumulative=args.cumulative,
    )
    if not feats:
        log.error("no graph could be featurized")
        return 1
    params = {
        "dataset": args.dataset_name,
        "binning": binning.value,
        "n_samples": args.samples,
        "nbar": args.nbar,
        "gamma": args.gamma,
        "seed": args.seed,
        "skipped": skipped,
        "featurize_seconds": time.perf_counter() - t0,
    }
    features_mod.write_features_csv(feats, labels, _out_path(args, "features.csv"), params)
    bandwidth = args.bandwidth or features_mod.default_bandwidth(feats)
    gram = features_mod.rbf_gram(feats, bandwidth)
    features_mod.write_gram_csv(gram, labels, _out_path(args, "gram.csv"), params)
    print(f"wrote {_out_path(args, 'features.csv')} and gram.csv ({len(feats)} graphs)")
    return 0


def cmd_parse_dataset(args) -> int:
    dataset = parse_tudataset(args.dataset_dir, args.dataset_name)
    sizes = [g.node_count for g in dataset.graphs]
    print(
        f"{dataset.name}: {len(dataset)} graphs, {dataset.n_classes} classes, "
        f"nodes [{min(sizes)}, {max(sizes)}]"
    )
    return 0


def _add_sampling_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nbar", type=float, default=5.0, help="target mean photon number")
    p.add_argument("--gamma", type=float, default=1.0, help="detector click threshold")
    p.add_argument("--seed", type=int, default=1, help="master RNG seed")
    p.add_argument("--output-dir", default=None, help="output directory (or $TGBS_OUTPUT_DIR)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tgbs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose-bench", help="time decomposition vs sampling per size")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--realizations", type=int, default=20)
    _add_sampling_flags(p)
    p.set_defaults(func=cmd_decompose_bench)

    p = sub.add_parser("seed-density", help="click-seed density vs random baseline")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--realizations", type=int, default=20)
    _add_sampling_flags(p)
    p.set_defaults(func=cmd_seed_density)

    p = sub.add_parser("solve", help="run a seed-and-search campaign")
    p.add_argument("--config", default=None, help="JSON config file (overrides flags)")
    p.add_argument("--problem", choices=campaign_mod.PROBLEMS, default="densest-k")
    p.add_argument("--sizes", type=int, nargs="+", default=[100])
    p.add_argument("--instances", type=int, default=10)
    p.add_argument(
        "--strategies",
        nargs="+",
        default=["gbs", "random-single", "random-j", "greedy-peeling"],
    )
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--graph-kind", choices=["planted", "erdos-renyi"], default="planted")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--cycles", type=int, default=50)
    _add_sampling_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("featurize", help="sample a dataset into feature vectors and a Gram matrix")
    p.add_argument("dataset_dir")
    p.add_argument("dataset_name")
    p.add_argument("--binning", choices=["count", "detector"], default="count")
    p.add_argument("--samples", type=int, default=6000)
    p.add_argument("--min-nodes", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--bandwidth", type=float, default=None)
    p.add_argument("--unsorted-detectors", action="store_true")
    p.add_argument("--cumulative", action="store_true")
    _add_sampling_flags(p)
    p.set_defaults(func=cmd_featurize)

    p = sub.add_parser("parse-dataset", help="parse a dataset directory and print a summary")
    p.add_argument("dataset_dir")
    p.add_argument("dataset_name")
    p.set_defaults(func=cmd_parse_dataset)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
