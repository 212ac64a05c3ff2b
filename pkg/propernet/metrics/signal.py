"""
Noise and diversity statistics of similarity series, used to compare epsilons.

Noise is the population variance and the normalized standard deviation.
Diversity quantizes the series into tokens and measures how well it
compresses: run-length encoding for string diversity, unique tokens for the
non-repetition level. Both are c/u with u the token count.
"""

import math
from dataclasses import dataclass, replace
from decimal import ROUND_HALF_UP, Decimal
from itertools import groupby
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..error_handling import EmptySeries, ZeroMean
from ..network.ingest import EventLog, extract
from .similarity import Metric, series


@dataclass(frozen=True)
class SeriesStats:
    length: int
    mean: float
    variance: float
    normalized_std: Optional[float]
    string_diversity: float
    non_repetition: float
    epsilon: Optional[int] = None
    metric: Optional[Metric] = None
    recommended: bool = False
    note: Optional[str] = None


def _values(values: Iterable[float]) -> np.ndarray:
    array = np.asarray(list(values), dtype=np.float64)
    if array.size == 0:
        raise EmptySeries("statistic needs a non-empty series")
    return array


def variance(values: Sequence[float]) -> float:
    """Population variance (1/t)·Σ(F_i − μ)²."""
    return float(np.var(_values(values)))


def normalized_std(values: Sequence[float]) -> float:
    """σ / μ; undefined for a zero-mean series."""
    array = _values(values)
    mean = float(np.mean(array))
    if mean == 0.0:
        raise ZeroMean("normalized standard deviation is undefined for a zero-mean series",
                       context={"length": int(array.size)})
    return math.sqrt(float(np.var(array))) / mean


def quantize(values: Sequence[float], decimals: int) -> Tuple[int, ...]:
    """Round half-up to ``decimals`` places and number distinct values by first appearance."""
    if decimals < 0:
        raise ValueError(f"decimals must be >= 0, got {decimals}")
    step = Decimal(1).scaleb(-decimals)
    tokens = {}
    out = []
    for value in values:
        rounded = Decimal(repr(float(value))).quantize(step, rounding=ROUND_HALF_UP)
        out.append(tokens.setdefault(rounded, len(tokens)))
    return tuple(out)


def string_diversity(values: Sequence[float], decimals: int = 2) -> float:
    """Run-length compression ratio: maximal runs / tokens."""
    tokens = quantize(values, decimals)
    if not tokens:
        raise EmptySeries("string diversity needs a non-empty series")
    runs = sum(1 for _ in groupby(tokens))
    return runs / len(tokens)


def non_repetition(values: Sequence[float], decimals: int = 2) -> float:
    """Unique-token compression ratio: distinct tokens / tokens."""
    tokens = quantize(values, decimals)
    if not tokens:
        raise EmptySeries("non-repetition needs a non-empty series")
    return len(set(tokens)) / len(tokens)


def series_stats(values: Sequence[float], decimals: int = 2) -> SeriesStats:
    """All statistics of one series; a zero mean leaves normalized_std empty."""
    array = _values(values)
    try:
        sigma_n: Optional[float] = normalized_std(array)
        note = None
    except ZeroMean:
        sigma_n, note = None, "zero_mean"
    return SeriesStats(
        length=int(array.size),
        mean=float(np.mean(array)),
        variance=float(np.var(array)),
        normalized_std=sigma_n,
        string_diversity=string_diversity(array, decimals),
        non_repetition=non_repetition(array, decimals),
        note=note,
    )


def recommend(rows: Sequence[SeriesStats]) -> List[SeriesStats]:
    """Flag, per metric, the epsilon with the highest string diversity among rows
    whose variance is at most the median variance across epsilons."""
    flagged = list(rows)
    for metric in {row.metric for row in rows}:
        indices = [i for i, row in enumerate(rows) if row.metric == metric]
        median = float(np.median([rows[i].variance for i in indices]))
        eligible = [i for i in indices if rows[i].variance <= median]
        best = min(eligible, key=lambda i: (-rows[i].string_diversity, rows[i].epsilon or 0))
        flagged[best] = replace(rows[best], recommended=True)
    return flagged


def stats_for_epsilons(log: EventLog, epsilons: Sequence[int], metric: Metric, decimals: int = 2,
                       strict: bool = False, reciprocal: bool = False) -> List[SeriesStats]:
    """One SeriesStats row per epsilon, with the advisory recommendation applied."""
    if not epsilons:
        raise ValueError("stats_for_epsilons needs at least one epsilon")
    metric = Metric(metric)
    rows = []
    for epsilon in epsilons:
        net = extract(log, epsilon, strict=strict, reciprocal=reciprocal)
        row = series_stats(series(net, metric).values, decimals)
        rows.append(replace(row, epsilon=epsilon, metric=metric))
    return recommend(rows)
