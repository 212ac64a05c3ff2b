"""
Null model for the number of common elements between two sets.

For sets of sizes A and B the model weights every possible common count x
(0 <= x <= min(A, B)) by binom(A + B - x, x). The cumulative probability of
at most C common elements by chance is

    P(C) = sum_{x<=C} binom(A+B-x, x) / sum_{x<=min(A,B)} binom(A+B-x, x)

Sums are evaluated in log space from a shared log-factorial table. An
observed common count at or below the critical count c* (largest c with
P(c) <= alpha) is a significant change between the two sets.
"""

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

import numpy as np
from scipy.special import gammaln, logsumexp

from ..error_handling import InvalidAlpha, OutOfRange
from ..network.graph import NodeId, Snapshot, neighbors

NO_CRITICAL_VALUE = "NoCriticalValue"
CDF_CACHE_SIZE = 4096


class LogFactorialTable:
    """log(n!) for 0..size, grown geometrically on demand."""

    def __init__(self, size: int = 256):
        self._lock = threading.Lock()
        self._values = gammaln(np.arange(size + 1, dtype=np.float64) + 1.0)

    def ensure(self, n: int) -> np.ndarray:
        if n >= len(self._values):
            with self._lock:
                if n >= len(self._values):
                    size = max(n, 2 * (len(self._values) - 1))
                    self._values = gammaln(np.arange(size + 1, dtype=np.float64) + 1.0)
        return self._values

    def log_binom(self, n: np.ndarray, k: np.ndarray) -> np.ndarray:
        table = self.ensure(int(np.max(n)) if np.size(n) else 0)
        return table[n] - table[k] - table[n - k]


@dataclass(frozen=True)
class NullAssessment:
    set_size_a: int
    set_size_b: int
    common: int
    p_value: float
    alpha: float
    critical_common: Optional[int]
    threshold_jaccard: Optional[float]
    significant_change: bool
    warning: Optional[str] = None


def _check_alpha(alpha: float) -> None:
    if not (0.0 < alpha < 1.0):
        raise InvalidAlpha(f"alpha must be strictly between 0 and 1, got {alpha}", context={"alpha": alpha})


class NullModel:
    """Cumulative distributions of the common-count null model, memoized per size pair.

    At most ``cache_size`` distributions are kept, least recently used first out.
    """

    def __init__(self, table: Optional[LogFactorialTable] = None, cache_size: int = CDF_CACHE_SIZE):
        self.table = table or LogFactorialTable()
        self._cdf = lru_cache(maxsize=cache_size)(self._distribution)

    def _distribution(self, small: int, large: int) -> np.ndarray:
        x = np.arange(small + 1)
        log_terms = self.table.log_binom(small + large - x, x)
        cumulative = np.logaddexp.accumulate(log_terms)
        values = np.minimum(np.exp(cumulative - logsumexp(log_terms)), 1.0)
        values[-1] = 1.0
        values.setflags(write=False)
        return values

    def cache_info(self):
        return self._cdf.cache_info()

    def cdf(self, a: int, b: int) -> np.ndarray:
        """P(0..min(A,B)) for sets of sizes A and B; the last entry is exactly 1.0."""
        if a < 0 or b < 0:
            raise OutOfRange(f"set sizes must be non-negative, got A={a}, B={b}", context={"A": a, "B": b})
        return self._cdf(min(a, b), max(a, b))

    def null_cdf(self, a: int, b: int, c: int) -> float:
        if not (0 <= c <= min(a, b)):
            raise OutOfRange(
                f"common count {c} outside [0, min(A, B)] for A={a}, B={b}",
                context={"A": a, "B": b, "C": c}
            )
        return float(self.cdf(a, b)[c])

    def critical_common(self, a: int, b: int, alpha: float) -> Optional[int]:
        """Largest c with P(c) <= alpha, or None when even P(0) exceeds alpha."""
        _check_alpha(alpha)
        distribution = self.cdf(a, b)
        count = int(np.searchsorted(distribution, alpha, side="right"))
        return count - 1 if count > 0 else None

    def assess_pair(self, prev_set_size: int, next_set_size: int, common: int,
                    alpha: float) -> NullAssessment:
        """Null-model verdict for one pair of sets."""
        p_value = self.null_cdf(prev_set_size, next_set_size, common)
        critical = self.critical_common(prev_set_size, next_set_size, alpha)
        threshold = None
        if critical is not None and prev_set_size + next_set_size > 0:
            threshold = critical / (prev_set_size + next_set_size - critical)
        return NullAssessment(
            set_size_a=prev_set_size,
            set_size_b=next_set_size,
            common=common,
            p_value=p_value,
            alpha=alpha,
            critical_common=critical,
            threshold_jaccard=threshold,
            significant_change=critical is not None and common <= critical,
            warning=None if critical is not None else NO_CRITICAL_VALUE,
        )

    def assess_neighbors(self, prev: Snapshot, next: Snapshot, alpha: float) -> Mapping[NodeId, NullAssessment]:
        """Per-node significance of neighborhood change, for every common node."""
        result = {}
        for v in sorted(prev.nodes & next.nodes):
            first, second = neighbors(prev, v), neighbors(next, v)
            result[v] = self.assess_pair(len(first), len(second), len(first & second), alpha)
        return result


_default_model = NullModel()


def null_cdf(a: int, b: int, c: int) -> float:
    """Probability of at most C common elements between random sets of sizes A and B."""
    return _default_model.null_cdf(a, b, c)


def critical_common(a: int, b: int, alpha: float) -> Optional[int]:
    return _default_model.critical_common(a, b, alpha)


def assess_pair(prev_set_size: int, next_set_size: int, common: int, alpha: float) -> NullAssessment:
    return _default_model.assess_pair(prev_set_size, next_set_size, common, alpha)


def assess_neighbors(prev: Snapshot, next: Snapshot, alpha: float) -> Mapping[NodeId, NullAssessment]:
    return _default_model.assess_neighbors(prev, next, alpha)
