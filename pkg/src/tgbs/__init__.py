"""Threshold-based Gaussian boson sampling and graph-optimization benchmarks."""

from .graphs import (
    Graph,
    NodeSubset,
    assign_uniform_weights,
    density,
    erdos_renyi,
    is_clique,
    planted_graph,
    subgraph_degree,
)
from .embedding import (
    EmbeddedProblem,
    NoSignalError,
    TakagiFactors,
    embed,
    mean_photon_number,
    rescale_to_mean_photon,
    takagi_decompose,
    weighted_encode,
)
from .sampler import (
    AmplitudeBatch,
    SampleBatch,
    generate_squeezed,
    propagate,
    sample_graph,
    sample_problem,
    threshold_detect,
)
from .solvers import (
    ClickSeedSupply,
    EmptySeedError,
    SearchResult,
    SeedStrategy,
    StrategyKind,
    densest_k_search,
    make_seed,
    max_clique_search,
    max_weighted_clique_search,
)
from .features import (
    Binning,
    FeatureVector,
    KernelMatrix,
    balanced_accuracy,
    count_binning,
    default_bandwidth,
    detector_binning,
    featurize_dataset,
    rbf_gram,
)
from .datasets import LabeledDataset, filter_by_size, parse_tudataset
from .campaign import ExperimentConfig, run_campaign

__version__ = "0.1.0"
