"""
Proper time interval segmentation.

Windows of length epsilon are compared one after another. A stable duration
grows by epsilon while the comparison is not a significant change under the
null model; a significant change closes the duration at the window boundary.
In ``consecutive`` mode each window is compared with the previous window; in
``aggregate`` mode it is compared with the union of the current duration,
which catches slow drift that no single consecutive pair reveals.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..error_handling import InvalidAlpha, SpanTooShort
from ..metrics.nullmodel import NO_CRITICAL_VALUE, NullAssessment, NullModel
from ..metrics.similarity import (
    NULL_MODEL_METRICS,
    Metric,
    adjacency_correlation,
    compare,
    neighborhood_similarity,
    pair_sets,
)
from ..network.graph import DynamicNetwork, Interval, Snapshot, aggregate
from ..network.ingest import EventLog, extract

logger = logging.getLogger(__name__)

BOTH_EMPTY = "both_empty"
ONE_SIDE_EMPTY = "one_side_empty"


class SegmentMode(str, Enum):
    CONSECUTIVE = "consecutive"
    AGGREGATE = "aggregate"


@dataclass(frozen=True)
class SegmentationConfig:
    epsilon: int
    metric: Metric = Metric.LINK
    alpha: float = 0.05
    mode: SegmentMode = SegmentMode.CONSECUTIVE

    def __post_init__(self):
        object.__setattr__(self, "metric", Metric(self.metric))
        object.__setattr__(self, "mode", SegmentMode(self.mode))
        if self.metric not in NULL_MODEL_METRICS:
            raise ValueError(f"segmentation metric must be node or link, got {self.metric.value!r}")
        if not (0.0 < self.alpha < 1.0):
            raise InvalidAlpha(f"alpha must be strictly between 0 and 1, got {self.alpha}",
                               context={"alpha": self.alpha})


@dataclass(frozen=True)
class PairDecision:
    """One comparison of the scan; ``reference`` is the previous window or the running aggregate."""
    reference: Interval
    next_interval: Interval
    metric: Metric
    score: float
    neighbor_score: float
    gamma_score: float
    assessment: NullAssessment

    @property
    def significant(self) -> bool:
        return self.assessment.significant_change


@dataclass(frozen=True)
class SegmentationResult:
    epsilon: int
    metric: Metric
    mode: SegmentMode
    alpha: float
    span: Interval
    durations: Tuple[int, ...]
    cut_points: Tuple[int, ...]
    ragged_tail: int
    proper_network: DynamicNetwork
    assessments: Tuple[PairDecision, ...]


def assess_snapshots(prev: Snapshot, nxt: Snapshot, metric: Metric, alpha: float,
                     model: Optional[NullModel] = None) -> NullAssessment:
    """Null-model verdict for a snapshot pair on the node or link sets.

    Two empty sets are stable. When exactly one side is empty the pair is
    judged as a complete replacement of the non-empty side: significant iff
    disjoint sets of that size admit a critical value.
    """
    model = model or NullModel()
    a, b, c = pair_sets(prev, nxt, metric)
    if a == 0 and b == 0:
        return NullAssessment(0, 0, 0, 1.0, alpha, None, None, False, BOTH_EMPTY)

    if a == 0 or b == 0:
        n = max(a, b)
        proxy = model.assess_pair(n, n, 0, alpha)
        if not proxy.significant_change:
            logger.warning("[%d, %d): one %s set is empty and %d elements admit no critical value at alpha=%g",
                           nxt.interval.start, nxt.interval.end, metric.value, n, alpha)
        return NullAssessment(a, b, 0, proxy.p_value, alpha, proxy.critical_common,
                              proxy.threshold_jaccard, proxy.significant_change, ONE_SIDE_EMPTY)

    result = model.assess_pair(a, b, c, alpha)
    if result.warning == NO_CRITICAL_VALUE:
        logger.warning("[%d, %d): %s sets of sizes %d and %d admit no critical value at alpha=%g; kept as stable",
                       nxt.interval.start, nxt.interval.end, metric.value, a, b, alpha)
    return result


def segment_network(net: DynamicNetwork, cfg: SegmentationConfig,
                    model: Optional[NullModel] = None) -> SegmentationResult:
    """Segment an extracted network into stable durations."""
    model = model or NullModel()
    windows = net.full_snapshots
    if len(windows) < 2:
        raise SpanTooShort(
            f"span {net.span.duration}s holds {len(windows)} full window(s) of {net.epsilon}s; need 2",
            context={"span": net.span.duration, "epsilon": net.epsilon}
        )

    segments: List[List[Snapshot]] = []
    current = [windows[0]]
    reference = windows[0]
    decisions = []
    for nxt in windows[1:]:
        assessment = assess_snapshots(reference, nxt, cfg.metric, cfg.alpha, model)
        decisions.append(PairDecision(
            reference=reference.interval,
            next_interval=nxt.interval,
            metric=cfg.metric,
            score=compare(reference, nxt, cfg.metric),
            neighbor_score=neighborhood_similarity(reference, nxt),
            gamma_score=adjacency_correlation(reference, nxt),
            assessment=assessment,
        ))
        if assessment.significant_change:
            segments.append(current)
            current, reference = [nxt], nxt
        else:
            current.append(nxt)
            if cfg.mode is SegmentMode.AGGREGATE:
                reference = aggregate([reference, nxt])
            else:
                reference = nxt
    segments.append(current)

    proper = tuple(aggregate(run) for run in segments)
    covered = Interval(net.span.start, windows[-1].interval.end)
    tail = net.ragged_tail
    result = SegmentationResult(
        epsilon=net.epsilon,
        metric=cfg.metric,
        mode=cfg.mode,
        alpha=cfg.alpha,
        span=net.span,
        durations=tuple(s.interval.duration for s in proper),
        cut_points=tuple(s.interval.start for s in proper[1:]),
        ragged_tail=tail.interval.duration if tail is not None else 0,
        proper_network=DynamicNetwork(net.epsilon, covered, proper),
        assessments=tuple(decisions),
    )
    logger.info("epsilon=%d %s/%s: %d durations, %d cuts", net.epsilon, cfg.metric.value,
                cfg.mode.value, len(result.durations), len(result.cut_points))
    return result


def segment(log: EventLog, cfg: SegmentationConfig, span: Optional[Interval] = None,
            strict: bool = False, reciprocal: bool = False) -> SegmentationResult:
    """Extract the epsilon network of a log and segment it."""
    net = extract(log, cfg.epsilon, span=span, strict=strict, reciprocal=reciprocal)
    return segment_network(net, cfg)
