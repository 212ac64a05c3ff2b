"""
propernet - proper time intervals for dynamic networks.

This package turns timestamped interaction logs into sequences of network
snapshots, scores how stable consecutive snapshots are, and cuts the time
span where a combinatorial null model says the network changed.
"""

# Core configuration
from .config import AnalysisConfig, get_config

# Error handling
from .error_handling import (
    ErrorCategory,
    PropernetError,
    ErrorHandler,
)

# Networks
from .network import (
    Link,
    Interval,
    Snapshot,
    DynamicNetwork,
    EventLog,
    LogFormat,
    aggregate,
    parse,
    clean,
    extract,
)

# Metrics
from .metrics import (
    Metric,
    NullModel,
    compare,
    series,
    null_cdf,
    critical_common,
    assess_pair,
    series_stats,
    topology_row,
)

# Segmentation
from .segmentation import SegmentationConfig, SegmentationResult, segment, report

__version__ = "0.1.0"
__all__ = [
    'AnalysisConfig',
    'get_config',
    'ErrorCategory',
    'PropernetError',
    'ErrorHandler',
    'Link',
    'Interval',
    'Snapshot',
    'DynamicNetwork',
    'EventLog',
    'LogFormat',
    'aggregate',
    'parse',
    'clean',
    'extract',
    'Metric',
    'NullModel',
    'compare',
    'series',
    'null_cdf',
    'critical_common',
    'assess_pair',
    'series_stats',
    'topology_row',
    'SegmentationConfig',
    'SegmentationResult',
    'segment',
    'report',
]
