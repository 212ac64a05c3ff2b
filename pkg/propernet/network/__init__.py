"""
Network package for propernet.

Snapshot value types and the log-to-network extraction pipeline.
"""

from .graph import (
    NodeId,
    Link,
    Interval,
    Snapshot,
    DynamicNetwork,
    intern_node,
    neighbors,
    aggregate,
    relabel,
)
from .ingest import (
    LogFormat,
    LogKind,
    SessionRecord,
    DyadicRecord,
    EventLog,
    WAP_EPSILONS,
    ENRON_EPSILONS,
    make_log,
    parse,
    clean,
    window_session,
    window_dyadic,
    extract,
)

__all__ = [
    'NodeId',
    'Link',
    'Interval',
    'Snapshot',
    'DynamicNetwork',
    'intern_node',
    'neighbors',
    'aggregate',
    'relabel',
    'LogFormat',
    'LogKind',
    'SessionRecord',
    'DyadicRecord',
    'EventLog',
    'WAP_EPSILONS',
    'ENRON_EPSILONS',
    'make_log',
    'parse',
    'clean',
    'window_session',
    'window_dyadic',
    'extract',
]
