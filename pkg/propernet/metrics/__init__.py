"""
Metrics package for propernet.

Similarity of consecutive snapshots, the common-count null model, signal
statistics for epsilon selection and per-snapshot topology.
"""

from .similarity import (
    Metric,
    JACCARD_METRICS,
    NULL_MODEL_METRICS,
    PairScore,
    SimilaritySeries,
    jaccard,
    node_similarity,
    link_similarity,
    neighbor_stability,
    neighborhood_similarity,
    adjacency_correlation,
    compare,
    pair_sets,
    series,
)
from .nullmodel import (
    NO_CRITICAL_VALUE,
    LogFactorialTable,
    NullAssessment,
    NullModel,
    null_cdf,
    critical_common,
    assess_pair,
    assess_neighbors,
)
from .signal import (
    SeriesStats,
    variance,
    normalized_std,
    quantize,
    string_diversity,
    non_repetition,
    series_stats,
    recommend,
    stats_for_epsilons,
)
from .topology import TopologyRow, topology_row, topology_series, topology_summary

__all__ = [
    'Metric',
    'JACCARD_METRICS',
    'NULL_MODEL_METRICS',
    'PairScore',
    'SimilaritySeries',
    'jaccard',
    'node_similarity',
    'link_similarity',
    'neighbor_stability',
    'neighborhood_similarity',
    'adjacency_correlation',
    'compare',
    'pair_sets',
    'series',
    'NO_CRITICAL_VALUE',
    'LogFactorialTable',
    'NullAssessment',
    'NullModel',
    'null_cdf',
    'critical_common',
    'assess_pair',
    'assess_neighbors',
    'SeriesStats',
    'variance',
    'normalized_std',
    'quantize',
    'string_diversity',
    'non_repetition',
    'series_stats',
    'recommend',
    'stats_for_epsilons',
    'TopologyRow',
    'topology_row',
    'topology_series',
    'topology_summary',
]
