"""
Run configuration model for the command line front end.

RunConfig validates one invocation's flags; defaults that are not given on
the command line come from AnalysisConfig.
"""

import re
from pathlib import Path
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..metrics.similarity import Metric
from ..network.ingest import ENRON_EPSILONS, WAP_EPSILONS, LogFormat

_UNIT_SECONDS = {"s": 1, "m": 60, "h": 3600, "d": 86400}
_EPSILON_PATTERN = re.compile(r"^(\d+)([smhd]?)$")
_PRESETS = {"wap": WAP_EPSILONS, "enron": ENRON_EPSILONS}


def parse_epsilon(token: str) -> int:
    """Parse one epsilon such as ``90``, ``5m``, ``1h`` or ``7d`` into seconds."""
    match = _EPSILON_PATTERN.match(token.strip().lower())
    if not match:
        raise ValueError(f"invalid epsilon {token!r}; expected digits with optional s/m/h/d suffix")
    seconds = int(match.group(1)) * _UNIT_SECONDS[match.group(2) or "s"]
    if seconds <= 0:
        raise ValueError(f"epsilon must be positive, got {token!r}")
    return seconds


def parse_epsilons(text: str) -> List[int]:
    """Parse a comma separated epsilon list; ``wap`` and ``enron`` expand to presets."""
    epsilons: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        preset = _PRESETS.get(token.lower())
        epsilons.extend(preset if preset else [parse_epsilon(token)])
    return epsilons


class RunConfig(BaseModel):
    """Validated flags for a single propernet invocation."""

    model_config = ConfigDict(frozen=True)

    command: Literal["extract", "similarity", "stats", "segment", "topology"]
    input: Path = Field(description="Raw interaction log (CSV)")
    format: LogFormat = Field(description="wap for session logs, dyadic for message logs")
    epsilons: List[int] = Field(min_length=1, description="Window lengths in seconds")
    metrics: List[Metric] = Field(
        default_factory=lambda: list(Metric),
        min_length=1,
        description="Similarity metrics to evaluate"
    )
    alpha: float = Field(gt=0.0, lt=1.0, description="Null-model error rate")
    decimals: int = Field(ge=0, description="Quantization decimals for string statistics")
    mode: Literal["consecutive", "aggregate"] = Field(description="Segmentation comparison mode")
    emit: Literal["csv", "json"] = Field(default="csv", description="Output format")
    out: Path = Field(description="Output file path")
    strict_colocation: bool = False
    reciprocal: bool = False
    summary: bool = False

    @field_validator("epsilons", mode="before")
    @classmethod
    def _parse_epsilons(cls, value):
        if isinstance(value, str):
            return parse_epsilons(value)
        return value

    @field_validator("epsilons")
    @classmethod
    def _dedupe_epsilons(cls, value: List[int]) -> List[int]:
        if any(epsilon <= 0 for epsilon in value):
            raise ValueError("every epsilon must be positive")
        return sorted(set(value))

    @field_validator("metrics", mode="before")
    @classmethod
    def _parse_metrics(cls, value):
        if isinstance(value, str):
            return [token.strip().lower() for token in value.split(",") if token.strip()]
        return value

    @field_validator("metrics")
    @classmethod
    def _order_metrics(cls, value: List[Metric]) -> List[Metric]:
        return [metric for metric in Metric if metric in value]
