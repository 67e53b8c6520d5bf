"""Benchmark campaigns: run one problem over sizes x instances x strategies.

Each search run produces one CSV row carrying its score and the split
timings (seed draw, matrix decomposition, search), so totals with and
without the embedding overhead can both be derived by post-processing.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import logging
import time

import numpy as np

from . import solvers
from .embedding import embed, weighted_encode
from .graphs import Graph, NodeSubset, assign_uniform_weights, erdos_renyi, planted_graph
from .sampler import SampleBatch, sample_problem
from .solvers import ClickSeedSupply, SeedStrategy, StrategyKind

__all__ = ["ExperimentConfig", "CampaignRow", "run_campaign", "write_rows_csv", "SOLVE_SCHEMA"]

log = logging.getLogger(__name__)

SOLVE_SCHEMA = "tgbs.solve.v1"

PROBLEMS = ("densest-k", "max-clique", "max-weighted-clique")


@dataclasses.dataclass
class ExperimentConfig:
    problem: str
    sizes: list[int]
    master_seed: int
    instances: int = 10
    strategies: list[str] = dataclasses.field(
        default_factory=lambda: [k.value for k in StrategyKind]
    )
    restarts: int = 20
    k: int | None = None  # densest-k target; defaults to the planted block size
    graph_kind: str = "planted"  # "planted" or "erdos-renyi"
    p_dense: float = 0.75
    p_sparse: float = 0.1
    dense_fraction: float = 0.1
    p_edge: float | None = None  # erdos-renyi edge probability; default log(n)/n
    nbar: float = 5.0
    nbar_per_node: float | None = None  # when set, target nbar_per_node * size instead
    gamma: float = 1.0
    alpha: float = 1.0
    cycles: int = 50
    output: str | None = None

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise ValueError(f"problem must be one of {PROBLEMS}")
        if self.graph_kind not in ("planted", "erdos-renyi"):
            raise ValueError("graph_kind must be 'planted' or 'erdos-renyi'")
        kinds = {k.value for k in StrategyKind}
        for s in self.strategies:
            if s not in kinds:
                raise ValueError(f"unknown strategy {s!r}")

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        return cls(**json.loads(text))

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_json(fh.read())


@dataclasses.dataclass(frozen=True)
class CampaignRow:
    problem: str
    size: int
    instance: int
    strategy: str
    restart: int
    k: int
    score: float
    subset_size: int
    seed_size: int
    pruned: bool
    iterations: int
    seed_seconds: float
    decompose_seconds: float
    search_seconds: float


def _derived_seed(*key: int) -> int:
    return int(np.random.SeedSequence(list(key)).generate_state(1)[0])


def _build_graph(config: ExperimentConfig, size: int, seed: int) -> tuple[Graph, NodeSubset | None]:
    if config.graph_kind == "planted":
        g, planted = planted_graph(
            size, config.p_dense, config.p_sparse, config.dense_fraction, seed
        )
    else:
        p = config.p_edge if config.p_edge is not None else np.log(size) / size
        g, planted = erdos_renyi(size, p, seed), None
    if config.problem == "max-weighted-clique":
        g = assign_uniform_weights(g, _derived_seed(seed, 1))
    return g, planted


def _gbs_batch(config: ExperimentConfig, g: Graph, seed: int) -> tuple[SampleBatch, float]:
    """Sample the graph's embedding; returns (batch, decompose_seconds)."""
    matrix = (
        weighted_encode(g, config.alpha)
        if config.problem == "max-weighted-clique"
        else np.asarray(g.adjacency)
    )
    nbar = (
        config.nbar_per_node * g.node_count
        if config.nbar_per_node is not None
        else config.nbar
    )
    t0 = time.perf_counter()
    problem = embed(matrix, nbar, config.gamma)
    t_dec = time.perf_counter() - t0
    batch = sample_problem(problem, config.restarts, seed)
    return batch, t_dec


def _run_search(
    config: ExperimentConfig, g: Graph, seed_subset: NodeSubset, k: int, rng_seed: int
) -> solvers.SearchResult:
    if config.problem == "densest-k":
        return solvers.densest_k_search(g, seed_subset, k)
    if config.problem == "max-clique":
        return solvers.max_clique_search(g, seed_subset, config.cycles, rng_seed)
    return solvers.max_weighted_clique_search(g, seed_subset, config.cycles, rng_seed)


def run_campaign(config: ExperimentConfig) -> list[CampaignRow]:
    """Execute the configured campaign; per-instance failures are logged, not fatal."""
    rows: list[CampaignRow] = []
    needs_samples = bool(
        {StrategyKind.GBS_SAMPLE.value, StrategyKind.RANDOM_J_NODE.value}
        & set(config.strategies)
    )
    for size in config.sizes:
        for instance in range(config.instances):
            try:
                rows.extend(_run_instance(config, size, instance, needs_samples))
            except Exception:
                log.exception("instance failed: size=%d instance=%d", size, instance)
    return rows


def _run_instance(
    config: ExperimentConfig, size: int, instance: int, needs_samples: bool
) -> list[CampaignRow]:
    graph_seed = _derived_seed(config.master_seed, size, instance)
    g, planted = _build_graph(config, size, graph_seed)
    if config.problem == "densest-k":
        k = config.k if config.k is not None else len(planted or ())
        if k == 0:
            raise ValueError("densest-k needs k or a planted graph")
    else:
        k = 0

    batch = None
    decompose_seconds = 0.0
    sample_share = 0.0
    if needs_samples:
        batch, decompose_seconds = _gbs_batch(
            config, g, _derived_seed(config.master_seed, size, instance, 7)
        )
        sample_share = sum(
            batch.timings.get(s, 0.0) for s in ("generate", "propagate", "threshold")
        ) / max(1, config.restarts)

    rows = []
    for strat_idx, name in enumerate(config.strategies):
        kind = StrategyKind(name)
        strategy = SeedStrategy(kind)
        supply = ClickSeedSupply(batch) if kind is StrategyKind.GBS_SAMPLE else batch
        # whole-graph peeling for densest-k is deterministic; one restart suffices
        deterministic = (
            kind is StrategyKind.GREEDY_PEELING and config.problem == "densest-k"
        )
        n_restarts = 1 if deterministic else config.restarts
        for restart in range(n_restarts):
            run_seed = _derived_seed(
                config.master_seed, size, instance, strat_idx, restart
            )
            t0 = time.perf_counter()
            try:
                seed_subset = solvers.make_seed(
                    g, strategy, samples=supply, rng_seed=run_seed
                )
            except solvers.EmptySeedError:
                log.warning(
                    "empty sampler seed: size=%d instance=%d restart=%d",
                    size,
                    instance,
                    restart,
                )
                continue
            seed_seconds = time.perf_counter() - t0
            if kind is StrategyKind.GBS_SAMPLE:
                seed_seconds += sample_share
            result = _run_search(config, g, seed_subset, k, run_seed)
            rows.append(
                CampaignRow(
                    problem=config.problem,
                    size=size,
                    instance=instance,
                    strategy=name,
                    restart=restart,
                    k=k,
                    score=result.score,
                    subset_size=len(result.subset),
                    seed_size=len(seed_subset),
                    pruned=result.pruned,
                    iterations=result.iterations,
                    seed_seconds=seed_seconds,
                    decompose_seconds=(
                        decompose_seconds if kind is StrategyKind.GBS_SAMPLE else 0.0
                    ),
                    search_seconds=result.search_seconds,
                )
            )
    return rows


def write_rows_csv(rows: list[CampaignRow], path, config: ExperimentConfig | None = None) -> None:
    """Write campaign rows with a schema header and, optionally, the resolved config."""
    fields = [f.name for f in dataclasses.fields(CampaignRow)]
    with open(path, "w", newline="") as fh:
        fh.write(f"# schema={SOLVE_SCHEMA}\n")
        if config is not None:
            fh.write("# config=" + json.dumps(dataclasses.asdict(config)) + "\n")
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow(dataclasses.asdict(row))


def read_rows_csv(path) -> list[dict]:
    """Read a campaign CSV back as dicts with numeric fields restored."""
    with open(path) as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    out = []
    for rec in csv.DictReader(lines):
        rec["size"] = int(rec["size"])
        rec["instance"] = int(rec["instance"])
        rec["restart"] = int(rec["restart"])
        rec["k"] = int(rec["k"])
        rec["score"] = float(rec["score"])
        rec["subset_size"] = int(rec["subset_size"])
        rec["seed_size"] = int(rec["seed_size"])
        rec["pruned"] = rec["pruned"] == "True"
        rec["iterations"] = int(rec["iterations"])
        for f in ("seed_seconds", "decompose_seconds", "search_seconds"):
            rec[f] = float(rec[f])
        out.append(rec)
    return out
