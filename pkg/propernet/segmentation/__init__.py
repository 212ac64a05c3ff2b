"""
Segmentation package for propernet.

Finds proper durations by cutting where the null model declares a
significant change, and serializes the result.
"""

from .segment import (
    SegmentMode,
    SegmentationConfig,
    PairDecision,
    SegmentationResult,
    assess_snapshots,
    segment,
    segment_network,
)
from .report import REPORT_COLUMNS, ReportSummary, report, report_rows, read_report

__all__ = [
    'SegmentMode',
    'SegmentationConfig',
    'PairDecision',
    'SegmentationResult',
    'assess_snapshots',
    'segment',
    'segment_network',
    'REPORT_COLUMNS',
    'ReportSummary',
    'report',
    'report_rows',
    'read_report',
]
