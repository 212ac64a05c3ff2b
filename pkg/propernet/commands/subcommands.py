"""
The five propernet subcommands.

Each command parses and cleans the input log once, then extracts one
network per epsilon and emits rows in (epsilon, window, metric) order.
"""

import logging
from dataclasses import fields, replace
from typing import Dict, List, Type

from ..config.run import RunConfig
from ..error_handling import TooFewSnapshots
from ..metrics.nullmodel import NullModel
from ..metrics.signal import SeriesStats, recommend, series_stats
from ..metrics.similarity import NULL_MODEL_METRICS, compare, series
from ..metrics.topology import SUMMARY_FIELDS, TopologyRow, topology_series, topology_summary
from ..network.graph import DynamicNetwork
from ..network.ingest import EventLog, extract
from ..segmentation.report import REPORT_COLUMNS, report, report_rows
from ..segmentation.segment import SegmentationConfig, assess_snapshots, segment_network
from .base import BaseCommand
from .output import Table

logger = logging.getLogger(__name__)

INVENTORY_COLUMNS = ["epsilon", "window_start", "window_end", "node_count", "link_count"]
SIMILARITY_COLUMNS = ["epsilon", "prev_start", "next_start", "metric", "score", "threshold_jaccard", "significant"]
STATS_COLUMNS = ["epsilon", "metric", "length", "mean", "variance", "normalized_std",
                 "string_diversity", "non_repetition", "recommended", "note"]
TOPOLOGY_COLUMNS = ["epsilon", "window_start", "window_end"] + [
    f.name for f in fields(TopologyRow) if f.name != "interval"
]
SUMMARY_COLUMNS = ["epsilon", "snapshots"] + SUMMARY_FIELDS


class NetworkCommand(BaseCommand):
    """Command working on one extracted network per epsilon."""

    def networks(self, cfg: RunConfig, log: EventLog) -> List[DynamicNetwork]:
        return [
            extract(log, epsilon, strict=cfg.strict_colocation, reciprocal=cfg.reciprocal)
            for epsilon in cfg.epsilons
        ]


class ExtractCommand(NetworkCommand):
    name = "extract"
    description = "Snapshot inventory per epsilon"

    def execute(self, cfg: RunConfig) -> Table:
        rows = []
        for net in self.networks(cfg, self.load_log(cfg)):
            for s in net:
                rows.append({
                    "epsilon": net.epsilon,
                    "window_start": s.interval.start,
                    "window_end": s.interval.end,
                    "node_count": len(s.nodes),
                    "link_count": len(s.links),
                })
        return Table(INVENTORY_COLUMNS, rows)


class SimilarityCommand(NetworkCommand):
    name = "similarity"
    description = "Similarity series with null-model thresholds"

    def execute(self, cfg: RunConfig) -> Table:
        model = NullModel()
        rows = []
        for net in self.networks(cfg, self.load_log(cfg)):
            if len(net) < 2:
                raise TooFewSnapshots(
                    f"need at least 2 snapshots, got {len(net)}",
                    context={"epsilon": net.epsilon, "snapshots": len(net)}
                )
            for prev, nxt in net.pairs():
                for metric in cfg.metrics:
                    row = {
                        "epsilon": net.epsilon,
                        "prev_start": prev.interval.start,
                        "next_start": nxt.interval.start,
                        "metric": metric.value,
                        "score": compare(prev, nxt, metric),
                        "threshold_jaccard": None,
                        "significant": None,
                    }
                    if metric in NULL_MODEL_METRICS:
                        assessment = assess_snapshots(prev, nxt, metric, cfg.alpha, model)
                        row["threshold_jaccard"] = assessment.threshold_jaccard
                        row["significant"] = assessment.significant_change
                    rows.append(row)
        return Table(SIMILARITY_COLUMNS, rows)


class StatsCommand(NetworkCommand):
    name = "stats"
    description = "Noise and diversity statistics per epsilon and metric"

    def execute(self, cfg: RunConfig) -> Table:
        stats: List[SeriesStats] = []
        for net in self.networks(cfg, self.load_log(cfg)):
            for metric in cfg.metrics:
                row = series_stats(series(net, metric).values, cfg.decimals)
                if row.note:
                    logger.warning("epsilon=%d %s: %s", net.epsilon, metric.value, row.note)
                stats.append(replace(row, epsilon=net.epsilon, metric=metric))
        rows = [
            {
                "epsilon": row.epsilon,
                "metric": row.metric.value,
                "length": row.length,
                "mean": row.mean,
                "variance": row.variance,
                "normalized_std": row.normalized_std,
                "string_diversity": row.string_diversity,
                "non_repetition": row.non_repetition,
                "recommended": row.recommended,
                "note": row.note,
            }
            for row in recommend(stats)
        ]
        return Table(STATS_COLUMNS, rows)


class SegmentCommand(NetworkCommand):
    name = "segment"
    description = "Proper durations, cut points and the assessment trail"

    def validate_input(self, cfg: RunConfig) -> bool:
        return any(metric in NULL_MODEL_METRICS for metric in cfg.metrics)

    def execute(self, cfg: RunConfig) -> Table:
        model = NullModel()
        reports, rows = [], []
        metrics = [metric for metric in cfg.metrics if metric in NULL_MODEL_METRICS]
        for net in self.networks(cfg, self.load_log(cfg)):
            for metric in metrics:
                seg_cfg = SegmentationConfig(net.epsilon, metric, cfg.alpha, cfg.mode)
                result = segment_network(net, seg_cfg, model)
                reports.append(report(result))
                rows.extend(report_rows(result))
        return Table(
            REPORT_COLUMNS,
            rows,
            integer_columns=["epsilon", "index", "start", "end", "duration",
                             "set_size_a", "set_size_b", "common", "critical_common"],
            payload=reports,
        )


class TopologyCommand(NetworkCommand):
    name = "topology"
    description = "Topological properties per window (or their averages with --summary)"

    def execute(self, cfg: RunConfig) -> Table:
        rows = []
        for net in self.networks(cfg, self.load_log(cfg)):
            topology = topology_series(
                net,
                exact_limit=self.settings.exact_path_limit,
                sample_sources=self.settings.path_sample_sources,
                seed=self.settings.sample_seed,
            )
            if cfg.summary:
                rows.append({"epsilon": net.epsilon, "snapshots": len(topology), **topology_summary(topology)})
                continue
            for row in topology:
                values = {f.name: getattr(row, f.name) for f in fields(TopologyRow) if f.name != "interval"}
                rows.append({
                    "epsilon": net.epsilon,
                    "window_start": row.interval.start,
                    "window_end": row.interval.end,
                    **values,
                })
        if cfg.summary:
            return Table(SUMMARY_COLUMNS, rows)
        return Table(TOPOLOGY_COLUMNS, rows)


COMMANDS: Dict[str, Type[BaseCommand]] = {
    command.name: command
    for command in (ExtractCommand, SimilarityCommand, StatsCommand, SegmentCommand, TopologyCommand)
}
