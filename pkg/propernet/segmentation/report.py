"""
Serializable views of a segmentation and a reader for written reports.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import pandas as pd

from .segment import PairDecision, SegmentationResult

REPORT_COLUMNS = [
    "record", "epsilon", "index", "start", "end", "duration", "metric",
    "score", "neighbor_score", "gamma_score", "set_size_a", "set_size_b", "common",
    "p_value", "critical_common", "threshold_jaccard", "significant", "warning",
]


@dataclass(frozen=True)
class ReportSummary:
    epsilon: int
    metric: str
    durations: Tuple[int, ...]
    cut_points: Tuple[int, ...]
    ragged_tail: int


def _pair_dict(decision: PairDecision) -> Dict[str, Any]:
    a = decision.assessment
    return {
        "prev_start": decision.reference.start,
        "prev_end": decision.reference.end,
        "next_start": decision.next_interval.start,
        "next_end": decision.next_interval.end,
        "metric": decision.metric.value,
        "score": decision.score,
        "neighbor_score": decision.neighbor_score,
        "gamma_score": decision.gamma_score,
        "set_size_a": a.set_size_a,
        "set_size_b": a.set_size_b,
        "common": a.common,
        "p_value": a.p_value,
        "critical_common": a.critical_common,
        "threshold_jaccard": a.threshold_jaccard,
        "significant": a.significant_change,
        "warning": a.warning,
    }


def report(result: SegmentationResult) -> Dict[str, Any]:
    """JSON-ready summary: durations, cut points, segments and the assessment trail."""
    return {
        "epsilon": result.epsilon,
        "metric": result.metric.value,
        "mode": result.mode.value,
        "alpha": result.alpha,
        "span_start": result.span.start,
        "span_end": result.span.end,
        "ragged_tail": result.ragged_tail,
        "durations": list(result.durations),
        "cut_points": list(result.cut_points),
        "segments": [
            {
                "start": s.interval.start,
                "end": s.interval.end,
                "duration": s.interval.duration,
                "node_count": len(s.nodes),
                "link_count": len(s.links),
            }
            for s in result.proper_network
        ],
        "assessments": [_pair_dict(d) for d in result.assessments],
    }


def report_rows(result: SegmentationResult) -> List[Dict[str, Any]]:
    """Flat CSV rows: one per duration, cut point, ragged tail and assessed pair."""
    rows: List[Dict[str, Any]] = []
    base = {"epsilon": result.epsilon, "metric": result.metric.value}
    for index, s in enumerate(result.proper_network):
        rows.append({**base, "record": "duration", "index": index, "start": s.interval.start,
                     "end": s.interval.end, "duration": s.interval.duration})
    for index, cut in enumerate(result.cut_points):
        rows.append({**base, "record": "cut", "index": index, "start": cut})
    if result.ragged_tail:
        rows.append({**base, "record": "ragged_tail", "index": 0,
                     "start": result.span.end - result.ragged_tail, "end": result.span.end,
                     "duration": result.ragged_tail})
    for index, decision in enumerate(result.assessments):
        pair = _pair_dict(decision)
        rows.append({
            **base,
            "record": "pair",
            "index": index,
            "start": pair.pop("next_start"),
            "end": pair.pop("next_end"),
            **{k: v for k, v in pair.items() if k in REPORT_COLUMNS},
        })
    return [{column: row.get(column) for column in REPORT_COLUMNS} for row in rows]


def _summaries_from_frame(frame: pd.DataFrame) -> List[ReportSummary]:
    summaries = []
    for (epsilon, metric), group in frame.groupby(["epsilon", "metric"], sort=True):
        durations = group[group["record"] == "duration"].sort_values("index")["duration"]
        cuts = group[group["record"] == "cut"].sort_values("index")["start"]
        tail = group[group["record"] == "ragged_tail"]["duration"]
        summaries.append(ReportSummary(
            epsilon=int(epsilon),
            metric=str(metric),
            durations=tuple(int(d) for d in durations),
            cut_points=tuple(int(c) for c in cuts),
            ragged_tail=int(tail.iloc[0]) if len(tail) else 0,
        ))
    return summaries


def read_report(path: Union[str, Path]) -> List[ReportSummary]:
    """Read durations, cut points and ragged tails back from a CSV or JSON report."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        payload = json.loads(path.read_text(encoding="utf-8"))
        reports = payload if isinstance(payload, list) else [payload]
        return [
            ReportSummary(
                epsilon=int(r["epsilon"]),
                metric=r["metric"],
                durations=tuple(int(d) for d in r["durations"]),
                cut_points=tuple(int(c) for c in r["cut_points"]),
                ragged_tail=int(r["ragged_tail"]),
            )
            for r in reports
        ]
    frame = pd.read_csv(path, keep_default_na=True, float_precision="round_trip")
    return _summaries_from_frame(frame)
