"""
Consecutive-snapshot similarity metrics.

Node, link and neighborhood similarity are Jaccard based; the adjacency
correlation coefficient is the Pearson correlation of the two snapshots'
link indicators over every unordered pair of their joint node set.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Tuple

from ..error_handling import NotCommonNode, TooFewSnapshots
from ..network.graph import DynamicNetwork, Interval, NodeId, Snapshot, neighbors


class Metric(str, Enum):
    NODE = "node"
    LINK = "link"
    NEIGHBOR = "neighbor"
    GAMMA = "gamma"


JACCARD_METRICS = frozenset({Metric.NODE, Metric.LINK, Metric.NEIGHBOR})
NULL_MODEL_METRICS = frozenset({Metric.NODE, Metric.LINK})


@dataclass(frozen=True)
class PairScore:
    prev_interval: Interval
    next_interval: Interval
    metric: Metric
    score: float


@dataclass(frozen=True)
class SimilaritySeries:
    epsilon: int
    metric: Metric
    scores: Tuple[PairScore, ...]

    @property
    def values(self) -> Tuple[float, ...]:
        return tuple(p.score for p in self.scores)

    def __len__(self) -> int:
        return len(self.scores)


def jaccard(first: AbstractSet, second: AbstractSet) -> float:
    """|X ∩ Y| / |X ∪ Y|, with two empty sets counted as unchanged (1.0)."""
    if not first and not second:
        return 1.0
    common = len(first & second)
    return common / (len(first) + len(second) - common)


def node_similarity(prev: Snapshot, next: Snapshot) -> float:
    return jaccard(prev.nodes, next.nodes)


def link_similarity(prev: Snapshot, next: Snapshot) -> float:
    return jaccard(prev.links, next.links)


def neighbor_stability(v: NodeId, prev: Snapshot, next: Snapshot) -> float:
    """Jaccard similarity of v's neighborhoods; v must be in both snapshots."""
    if v not in prev.nodes or v not in next.nodes:
        raise NotCommonNode(
            f"node {v!r} is not present in both snapshots",
            context={"node": v, "in_prev": v in prev.nodes, "in_next": v in next.nodes}
        )
    return jaccard(neighbors(prev, v), neighbors(next, v))


def neighborhood_similarity(prev: Snapshot, next: Snapshot) -> float:
    """Mean neighbor stability over common nodes; 0.0 when there are none."""
    common = prev.nodes & next.nodes
    if not common:
        return 0.0
    total = math.fsum(jaccard(neighbors(prev, v), neighbors(next, v)) for v in sorted(common))
    return total / len(common)


def adjacency_correlation(prev: Snapshot, next: Snapshot) -> float:
    """Pearson correlation of link indicators over all pairs of the joint node set.

    Computed from link counts: with M pairs, a and b links and c shared links,
    r = (M·c − a·b) / sqrt(a(M−a)·b(M−b)). Constant indicator vectors give 0.0.
    """
    n = len(prev.nodes | next.nodes)
    pairs = n * (n - 1) // 2
    a, b = len(prev.links), len(next.links)
    if a in (0, pairs) or b in (0, pairs):
        return 0.0
    c = len(prev.links & next.links)
    numerator = pairs * c - a * b
    return numerator / math.sqrt(a * (pairs - a) * b * (pairs - b))


_METRIC_FUNCTIONS = {
    Metric.NODE: node_similarity,
    Metric.LINK: link_similarity,
    Metric.NEIGHBOR: neighborhood_similarity,
    Metric.GAMMA: adjacency_correlation,
}


def compare(prev: Snapshot, next: Snapshot, metric: Metric) -> float:
    return _METRIC_FUNCTIONS[Metric(metric)](prev, next)


def pair_sets(prev: Snapshot, next: Snapshot, metric: Metric) -> Tuple[int, int, int]:
    """(A, B, C) set sizes and common count for the node or link sets."""
    metric = Metric(metric)
    if metric is Metric.NODE:
        first, second = prev.nodes, next.nodes
    elif metric is Metric.LINK:
        first, second = prev.links, next.links
    else:
        raise ValueError(f"metric {metric.value!r} has no null model")
    return len(first), len(second), len(first & second)


def series(net: DynamicNetwork, metric: Metric) -> SimilaritySeries:
    """Scores of every consecutive snapshot pair, in order."""
    metric = Metric(metric)
    if len(net) < 2:
        raise TooFewSnapshots(
            f"need at least 2 snapshots, got {len(net)}",
            context={"epsilon": net.epsilon, "snapshots": len(net)}
        )
    function = _METRIC_FUNCTIONS[metric]
    scores = tuple(
        PairScore(prev.interval, nxt.interval, metric, function(prev, nxt))
        for prev, nxt in net.pairs()
    )
    return SimilaritySeries(net.epsilon, metric, scores)
