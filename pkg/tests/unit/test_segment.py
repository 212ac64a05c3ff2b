"""Unit tests for proper time interval segmentation."""
import random
from itertools import combinations

import pytest

from propernet.error_handling import InvalidAlpha, SpanTooShort
from propernet.metrics.nullmodel import NO_CRITICAL_VALUE
from propernet.metrics.similarity import Metric
from propernet.network.graph import DynamicNetwork, Interval, Snapshot, relabel
from propernet.network.ingest import DyadicRecord, LogKind, make_log
from propernet.segmentation.segment import (
    BOTH_EMPTY,
    ONE_SIDE_EMPTY,
    SegmentationConfig,
    SegmentMode,
    assess_snapshots,
    segment,
    segment_network,
)

from tests.fixtures.sample_data import (
    NODE_NAMES,
    drift_nodes,
    network,
    planted_regimes,
    random_pairs,
    snapshot,
)

EPSILON = 60


def _fuzzed_network(rng, windows, ragged=False):
    sizes = [rng.randint(1, 12) for _ in range(windows)]
    pool = [random_pairs(rng, 10) for _ in range(3)]
    sequence = [pool[rng.randrange(3)][:size] for size in sizes]
    net = network(sequence, EPSILON)
    if not ragged:
        return net
    tail = Snapshot.empty(Interval(windows * EPSILON, windows * EPSILON + 17), ragged=True)
    return DynamicNetwork(EPSILON, Interval(0, windows * EPSILON + 17), net.snapshots + (tail,))


class TestSegmentationConfig:
    """Configuration checks."""

    def test_defaults(self):
        """Test link metric, alpha 0.05 and consecutive mode by default."""
        cfg = SegmentationConfig(EPSILON)
        assert (cfg.metric, cfg.alpha, cfg.mode) == (Metric.LINK, 0.05, SegmentMode.CONSECUTIVE)

    def test_metric_needs_null_model(self):
        """Test only node and link metrics can drive segmentation."""
        with pytest.raises(ValueError):
            SegmentationConfig(EPSILON, metric=Metric.GAMMA)

    @pytest.mark.parametrize("alpha", [0.0, 1.0])
    def test_invalid_alpha(self, alpha):
        """Test alpha must lie strictly between 0 and 1."""
        with pytest.raises(InvalidAlpha):
            SegmentationConfig(EPSILON, alpha=alpha)


class TestAssessSnapshots:
    """Pair verdicts including the empty-set rules."""

    def test_both_empty(self, null_model):
        """Test two empty link sets are stable with a warning."""
        result = assess_snapshots(snapshot(0, 60), snapshot(60, 120), Metric.LINK, 0.05, null_model)
        assert not result.significant_change
        assert result.warning == BOTH_EMPTY

    def test_one_side_empty_large(self, null_model):
        """Test a large set vanishing is a significant change."""
        prev = network(planted_regimes(1, windows=1)).snapshots[0]
        result = assess_snapshots(prev, snapshot(60, 120), Metric.LINK, 0.05, null_model)
        assert result.significant_change
        assert result.warning == ONE_SIDE_EMPTY
        assert (result.set_size_a, result.set_size_b, result.common) == (30, 0, 0)

    def test_one_side_empty_small(self, null_model, caplog):
        """Test a single link vanishing admits no critical value and stays stable."""
        result = assess_snapshots(snapshot(0, 60, [("a", "b")]), snapshot(60, 120), Metric.LINK, 0.05, null_model)
        assert not result.significant_change
        assert "admit no critical value" in caplog.text

    def test_no_critical_value_logged(self, null_model, caplog):
        """Test tiny non-empty sets are kept stable and logged."""
        result = assess_snapshots(snapshot(0, 60, [("a", "b")]), snapshot(60, 120, [("c", "d")]),
                                  Metric.LINK, 0.05, null_model)
        assert not result.significant_change
        assert result.warning == NO_CRITICAL_VALUE
        assert "no critical value" in caplog.text


class TestSegmentNetwork:
    """Cut decisions over a whole network."""

    def test_planted_boundary_recovered(self):
        """Test two regimes give exactly one cut at the planted boundary across seeds."""
        exact, spurious = 0, 0
        for seed in range(100):
            net = network(planted_regimes(seed), EPSILON)
            result = segment_network(net, SegmentationConfig(EPSILON, Metric.LINK, 0.05))
            if 6 * EPSILON in result.cut_points:
                exact += 1
            if any(cut != 6 * EPSILON for cut in result.cut_points):
                spurious += 1
        assert exact >= 95
        assert spurious <= 5

    def test_two_segments(self):
        """Test durations and proper snapshots of a two-regime network."""
        net = network(planted_regimes(0), EPSILON)
        result = segment_network(net, SegmentationConfig(EPSILON))
        assert result.durations == (6 * EPSILON, 6 * EPSILON)
        assert result.cut_points == (6 * EPSILON,)
        assert len(result.assessments) == 11
        assert [s.interval for s in result.proper_network] == [Interval(0, 360), Interval(360, 720)]

    def test_stable_network_is_one_segment(self):
        """Test identical windows never cut."""
        net = network([[("a", "b"), ("b", "c")]] * 5, EPSILON)
        result = segment_network(net, SegmentationConfig(EPSILON))
        assert result.durations == (5 * EPSILON,)
        assert result.cut_points == ()

    def test_span_too_short(self):
        """Test a single full window cannot be segmented."""
        with pytest.raises(SpanTooShort):
            segment_network(network([[("a", "b")]], EPSILON), SegmentationConfig(EPSILON))

    def test_ragged_tail_excluded(self):
        """Test the ragged tail is reported, not segmented."""
        net = _fuzzed_network(random.Random(0), 4, ragged=True)
        result = segment_network(net, SegmentationConfig(EPSILON))
        assert result.ragged_tail == 17
        assert sum(result.durations) == 4 * EPSILON
        assert len(result.assessments) == 3

    @pytest.mark.parametrize("seed", range(30))
    def test_durations_tile_span(self, seed):
        """Test durations are multiples of epsilon covering the span with the tail."""
        rng = random.Random(seed)
        net = _fuzzed_network(rng, rng.randint(2, 15), ragged=rng.random() < 0.5)
        for mode in SegmentMode:
            result = segment_network(net, SegmentationConfig(EPSILON, mode=mode))
            assert all(d > 0 and d % EPSILON == 0 for d in result.durations)
            assert sum(result.durations) + result.ragged_tail == net.span.duration
            assert len(result.cut_points) == len(result.durations) - 1

    @pytest.mark.parametrize("seed", range(20))
    def test_cuts_monotone_in_alpha(self, seed):
        """Test a smaller alpha never produces more cuts."""
        rng = random.Random(100 + seed)
        net = _fuzzed_network(rng, 12)
        counts = [
            len(segment_network(net, SegmentationConfig(EPSILON, alpha=alpha)).cut_points)
            for alpha in (0.2, 0.05, 0.01, 0.001)
        ]
        assert counts == sorted(counts, reverse=True)

    def test_tiny_alpha_on_planted_regimes(self):
        """Test alpha 1e-9 cuts at most as often as alpha 0.05."""
        net = network(planted_regimes(3), EPSILON)
        strict = segment_network(net, SegmentationConfig(EPSILON, alpha=1e-9))
        loose = segment_network(net, SegmentationConfig(EPSILON, alpha=0.05))
        assert len(strict.cut_points) <= 1
        assert len(strict.cut_points) <= len(loose.cut_points)

    def test_aggregate_mode_detects_drift(self):
        """Test slow drift is invisible pairwise but cut against the running aggregate."""
        windows = drift_nodes()
        net = network([[]] * len(windows), EPSILON, nodes=windows)
        consecutive = segment_network(net, SegmentationConfig(EPSILON, Metric.NODE))
        aggregate = segment_network(net, SegmentationConfig(EPSILON, Metric.NODE, mode=SegmentMode.AGGREGATE))
        assert consecutive.cut_points == ()
        assert len(aggregate.cut_points) >= 1

    @pytest.mark.parametrize("metric", [Metric.NODE, Metric.LINK])
    @pytest.mark.parametrize("shape", ["identical", "disjoint"])
    def test_modes_agree_without_drift(self, metric, shape):
        """Test both modes segment alike when windows repeat or never overlap."""
        groups = [NODE_NAMES[5 * k:5 * k + 5] for k in range(6)]
        if shape == "identical":
            groups = [groups[0]] * 6
        net = network([list(combinations(g, 2)) for g in groups], EPSILON)
        consecutive = segment_network(net, SegmentationConfig(EPSILON, metric))
        aggregate = segment_network(net, SegmentationConfig(EPSILON, metric, mode=SegmentMode.AGGREGATE))
        assert consecutive.durations == aggregate.durations
        assert consecutive.cut_points == aggregate.cut_points
        expected = (6 * EPSILON,) if shape == "identical" else (EPSILON,) * 6
        assert consecutive.durations == expected

    def test_relabeling_invariance(self):
        """Test segmentation is unchanged under a node-id bijection."""
        net = network(planted_regimes(4), EPSILON)
        names = sorted(set().union(*(s.nodes for s in net)))
        shuffled = names[:]
        random.Random(4).shuffle(shuffled)
        mapping = dict(zip(names, shuffled))
        moved = DynamicNetwork(EPSILON, net.span, tuple(relabel(s, mapping) for s in net))
        cfg = SegmentationConfig(EPSILON)
        before, after = segment_network(net, cfg), segment_network(moved, cfg)
        assert before.cut_points == after.cut_points
        assert [d.assessment for d in before.assessments] == [d.assessment for d in after.assessments]
        assert [d.score for d in before.assessments] == [d.score for d in after.assessments]


class TestSegmentLog:
    """Segmentation straight from an event log."""

    def test_segment_extracts_then_segments(self):
        """Test segment() on a dyadic log with a planted switch."""
        records = []
        for k, pairs in enumerate(planted_regimes(8)):
            for u, v in pairs:
                records.append(DyadicRecord(k * EPSILON, u, (v,)))
        records.append(DyadicRecord(12 * EPSILON - 1, "n00", ("n01",)))
        log = make_log(LogKind.DYADIC, records)
        result = segment(log, SegmentationConfig(EPSILON))
        assert result.span == Interval(0, 12 * EPSILON)
        assert 6 * EPSILON in result.cut_points

    def test_empty_ragged_tail_reported(self):
        """Test a ragged tail with no activity still counts towards the span."""
        log = make_log(LogKind.DYADIC, [DyadicRecord(0, "a", ("b",)), DyadicRecord(60, "a", ("b",))])
        result = segment(log, SegmentationConfig(EPSILON), span=Interval(0, 150))
        assert result.durations == (120,)
        assert result.ragged_tail == 30
        assert sum(result.durations) + result.ragged_tail == result.span.duration
