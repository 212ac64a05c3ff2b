"""
Parsing, cleaning and windowing of raw interaction logs.

Two log kinds are supported: session logs of devices connected to wireless
access points (co-location) and dyadic message logs (sender to recipients).
Both are turned into DynamicNetworks by tiling a span into epsilon windows.
"""

import logging
import re
from collections import defaultdict
from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import BinaryIO, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd

from ..error_handling import EmptyInput, InvalidEpsilon, MalformedHeader, WrongKind
from .graph import DynamicNetwork, Interval, Link, NodeId, Snapshot, intern_node

logger = logging.getLogger(__name__)

MINUTE = 60
DAY = 86400

# Candidate window lengths used for the campus access point logs and the
# company email corpus respectively.
WAP_EPSILONS = [m * MINUTE for m in (1, 3, 5, 10, 30, 40, 60, 1440)]
ENRON_EPSILONS = [d * DAY for d in (1, 7, 15, 30, 90, 180)]

WAP_COLUMNS = ["device_id", "ap_name", "connect_ts", "disconnect_ts"]
DYADIC_COLUMNS = ["timestamp", "from", "to"]

_INTEGER = re.compile(r"^-?\d+$")
_BAD_ROW = "\x00malformed"


class LogFormat(str, Enum):
    """On-disk CSV format."""
    WAP = "wap"
    DYADIC = "dyadic"


class LogKind(str, Enum):
    """Kind of records held by an EventLog."""
    SESSION = "session"
    DYADIC = "dyadic"


@dataclass(frozen=True)
class SessionRecord:
    """One device connection to one location; timestamps may be missing before cleaning."""
    actor: NodeId
    location: str
    connect: Optional[int]
    disconnect: Optional[int]

    @property
    def complete(self) -> bool:
        return self.connect is not None and self.disconnect is not None

    def overlaps(self, interval: Interval) -> bool:
        """Closed session [connect, disconnect] meets half-open [start, end)."""
        return self.complete and self.connect < interval.end and self.disconnect >= interval.start


@dataclass(frozen=True)
class DyadicRecord:
    """One message from a sender to one or more recipients."""
    timestamp: int
    sender: NodeId
    recipients: Tuple[NodeId, ...]


Record = Union[SessionRecord, DyadicRecord]


@dataclass(frozen=True)
class EventLog:
    """Chronologically sorted records of one kind plus parse diagnostics."""
    kind: LogKind
    records: Tuple[Record, ...]
    span: Optional[Interval]
    malformed: Tuple[Tuple[int, str], ...] = ()

    def __len__(self) -> int:
        return len(self.records)


def _session_key(record: SessionRecord):
    return (record.actor, record.connect is None, record.connect or 0,
            record.disconnect is None, record.disconnect or 0, record.location)


def _dyadic_key(record: DyadicRecord):
    return (record.timestamp, record.sender, record.recipients)


def _span_of(kind: LogKind, records: Sequence[Record]) -> Optional[Interval]:
    if kind is LogKind.SESSION:
        complete = [r for r in records if r.complete]
        if not complete:
            return None
        return Interval(min(r.connect for r in complete), max(r.disconnect for r in complete) + 1)
    if not records:
        return None
    return Interval(min(r.timestamp for r in records), max(r.timestamp for r in records) + 1)


def make_log(kind: LogKind, records: Iterable[Record],
             malformed: Sequence[Tuple[int, str]] = ()) -> EventLog:
    """Sort records into canonical order and compute the covering span."""
    key = _session_key if kind is LogKind.SESSION else _dyadic_key
    ordered = tuple(sorted(records, key=key))
    return EventLog(kind, ordered, _span_of(kind, ordered), tuple(malformed))


def _parse_timestamp(value: str) -> int:
    """Integer epoch seconds, or an ISO-8601 timestamp normalized to UTC."""
    if _INTEGER.match(value):
        return int(value)
    stamp = pd.Timestamp(value)
    if pd.isna(stamp):
        raise ValueError(f"not a timestamp: {value!r}")
    if stamp.tzinfo is None:
        stamp = stamp.tz_localize("UTC")
    return int(stamp.tz_convert("UTC").timestamp())


def _read_frame(source, columns: List[str]) -> pd.DataFrame:
    width = len(columns)

    def keep_position(fields: List[str]) -> List[str]:
        # Keep a placeholder so row positions still map to file lines.
        return [_BAD_ROW] + [""] * (width - 1)

    # The header is read as an ordinary row: its width fixes the column count,
    # so over-long data rows reach on_bad_lines instead of being truncated.
    try:
        frame = pd.read_csv(
            source,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            encoding="utf-8",
            engine="python",
            on_bad_lines=keep_position,
        )
    except pd.errors.EmptyDataError as e:
        raise EmptyInput("input log is empty", context={"expected_header": ",".join(columns)}) from e

    # Short rows are padded with NaN.
    frame = frame.fillna("")
    header = [str(c).strip() for c in frame.iloc[0]]
    if header != columns:
        raise MalformedHeader(
            f"expected header {','.join(columns)!r}, got {','.join(header)!r}",
            context={"expected": columns, "found": header}
        )
    frame = frame.iloc[1:].reset_index(drop=True)
    frame.columns = columns
    return frame


def _session_rows(frame: pd.DataFrame, malformed: List[Tuple[int, str]]) -> List[SessionRecord]:
    records = []
    for position, (device, location, connect, disconnect) in enumerate(frame.itertuples(index=False, name=None)):
        line = position + 2
        fields = [str(v).strip() for v in (device, location, connect, disconnect)]
        if not any(fields):
            continue
        if fields[0] == _BAD_ROW:
            malformed.append((line, "wrong number of fields"))
            continue
        device, location, connect, disconnect = fields
        if not device or not location:
            malformed.append((line, "missing device_id or ap_name"))
            continue
        try:
            start = _parse_timestamp(connect) if connect else None
            end = _parse_timestamp(disconnect) if disconnect else None
        except ValueError:
            malformed.append((line, "unparseable timestamp"))
            continue
        if start is not None and end is not None and start > end:
            malformed.append((line, "connect_ts after disconnect_ts"))
            continue
        records.append(SessionRecord(intern_node(device), location, start, end))
    return records


def _dyadic_rows(frame: pd.DataFrame, malformed: List[Tuple[int, str]]) -> List[DyadicRecord]:
    records = []
    for position, (timestamp, sender, targets) in enumerate(frame.itertuples(index=False, name=None)):
        line = position + 2
        fields = [str(v).strip() for v in (timestamp, sender, targets)]
        if not any(fields):
            continue
        if fields[0] == _BAD_ROW:
            malformed.append((line, "wrong number of fields"))
            continue
        timestamp, sender, targets = fields
        recipients = tuple(intern_node(t.strip()) for t in targets.split(";") if t.strip())
        if not timestamp or not sender or not recipients:
            malformed.append((line, "missing timestamp, from or to"))
            continue
        try:
            when = _parse_timestamp(timestamp)
        except ValueError:
            malformed.append((line, "unparseable timestamp"))
            continue
        records.append(DyadicRecord(when, intern_node(sender), recipients))
    return records


def parse(source: Union[str, Path, BinaryIO], fmt: Union[LogFormat, str]) -> EventLog:
    """Parse a WAP or dyadic CSV log into a sorted, uncleaned EventLog."""
    fmt = LogFormat(fmt)
    columns = WAP_COLUMNS if fmt is LogFormat.WAP else DYADIC_COLUMNS
    frame = _read_frame(source, columns)

    malformed: List[Tuple[int, str]] = []
    if fmt is LogFormat.WAP:
        kind, records = LogKind.SESSION, _session_rows(frame, malformed)
    else:
        kind, records = LogKind.DYADIC, _dyadic_rows(frame, malformed)

    for line, reason in malformed:
        logger.warning("line %d skipped: %s", line, reason)
    if not records:
        raise EmptyInput(
            "input log holds no usable records",
            context={"malformed_lines": len(malformed)}
        )

    logger.info("parsed %d %s records (%d malformed lines)", len(records), kind.value, len(malformed))
    return make_log(kind, records, malformed)


def _require(log: EventLog, kind: LogKind, operation: str) -> None:
    if log.kind is not kind:
        raise WrongKind(
            f"{operation} needs a {kind.value} log, got {log.kind.value}",
            context={"operation": operation, "kind": log.kind.value}
        )


def clean(log: EventLog) -> EventLog:
    """Drop incomplete sessions and merge contiguous sessions at the same location.

    Per actor, in connection order, a record that starts exactly where the
    previous one ended at the same location is folded into it; the fold is
    applied transitively along chains.
    """
    _require(log, LogKind.SESSION, "clean")
    complete = [r for r in log.records if r.complete]
    dropped = len(log.records) - len(complete)

    merged: List[SessionRecord] = []
    for record in sorted(complete, key=_session_key):
        last = merged[-1] if merged else None
        if (last is not None and last.actor == record.actor and last.location == record.location
                and last.disconnect == record.connect):
            merged[-1] = replace(last, disconnect=max(last.disconnect, record.disconnect))
        else:
            merged.append(record)

    logger.info("clean: dropped %d incomplete records, merged %d into %d sessions",
                dropped, len(complete), len(merged))
    return make_log(LogKind.SESSION, merged, log.malformed)


def _colocation_snapshot(records: Iterable[SessionRecord], interval: Interval,
                         strict: bool, ragged: bool = False) -> Snapshot:
    nodes = set()
    by_location: Dict[str, List[SessionRecord]] = defaultdict(list)
    for record in records:
        if record.overlaps(interval):
            nodes.add(record.actor)
            by_location[record.location].append(record)

    links = set()
    for location in sorted(by_location):
        sessions = by_location[location]
        if strict:
            for first, second in combinations(sessions, 2):
                if first.actor == second.actor:
                    continue
                lo = max(first.connect, second.connect, interval.start)
                hi = min(first.disconnect, second.disconnect)
                if lo < interval.end and lo <= hi:
                    links.add(Link.of(first.actor, second.actor))
        else:
            actors = sorted({s.actor for s in sessions})
            links.update(Link.of(u, v) for u, v in combinations(actors, 2))
    return Snapshot(interval, frozenset(nodes), frozenset(links), ragged)


def _message_snapshot(records: Iterable[DyadicRecord], interval: Interval,
                      reciprocal: bool, ragged: bool = False) -> Snapshot:
    nodes = set()
    directed = set()
    for record in records:
        if not interval.contains(record.timestamp):
            continue
        nodes.add(record.sender)
        for recipient in record.recipients:
            nodes.add(recipient)
            if recipient != record.sender:
                directed.add((record.sender, recipient))

    if reciprocal:
        pairs = {(u, v) for u, v in directed if (v, u) in directed}
    else:
        pairs = directed
    links = frozenset(Link.of(u, v) for u, v in pairs)
    return Snapshot(interval, frozenset(nodes), links, ragged)


def window_session(log: EventLog, interval: Interval, strict: bool = False) -> Snapshot:
    """Co-location snapshot: actors overlapping the window, linked when they share a location.

    With ``strict`` the two sessions must also overlap each other inside the
    window, not merely each overlap the window.
    """
    _require(log, LogKind.SESSION, "window_session")
    return _colocation_snapshot(log.records, interval, strict)


def window_dyadic(log: EventLog, interval: Interval, reciprocal: bool = False) -> Snapshot:
    """Message snapshot: sender and recipients of messages inside the window, linked pairwise."""
    _require(log, LogKind.DYADIC, "window_dyadic")
    return _message_snapshot(log.records, interval, reciprocal)


def _bucket_sessions(records: Sequence[SessionRecord], tiles: List[Interval],
                     span: Interval, epsilon: int) -> List[List[SessionRecord]]:
    buckets: List[List[SessionRecord]] = [[] for _ in tiles]
    last = len(tiles) - 1
    for record in records:
        if not record.complete:
            continue
        first = max(0, (record.connect - span.start) // epsilon)
        final = min(last, (record.disconnect - span.start) // epsilon)
        for k in range(first, final + 1):
            if record.overlaps(tiles[k]):
                buckets[k].append(record)
    return buckets


def _bucket_messages(records: Sequence[DyadicRecord], tiles: List[Interval],
                     span: Interval, epsilon: int) -> List[List[DyadicRecord]]:
    buckets: List[List[DyadicRecord]] = [[] for _ in tiles]
    for record in records:
        if span.contains(record.timestamp):
            buckets[(record.timestamp - span.start) // epsilon].append(record)
    return buckets


def extract(log: EventLog, epsilon: int, span: Optional[Interval] = None,
            strict: bool = False, reciprocal: bool = False) -> DynamicNetwork:
    """Tile span into epsilon windows and build one snapshot per window."""
    if epsilon <= 0:
        raise InvalidEpsilon(f"epsilon must be positive, got {epsilon}", context={"epsilon": epsilon})
    span = span or log.span
    if span is None:
        raise EmptyInput("log has no timestamped records to derive a span from")

    tiles = DynamicNetwork.tile(span, epsilon)
    snapshots = []
    if log.kind is LogKind.SESSION:
        buckets = _bucket_sessions(log.records, tiles, span, epsilon)
        for tile, bucket in zip(tiles, buckets):
            snapshots.append(_colocation_snapshot(bucket, tile, strict, tile.duration < epsilon))
    else:
        buckets = _bucket_messages(log.records, tiles, span, epsilon)
        for tile, bucket in zip(tiles, buckets):
            snapshots.append(_message_snapshot(bucket, tile, reciprocal, tile.duration < epsilon))

    if snapshots[-1].ragged:
        logger.info("epsilon=%d: last window is ragged (%d s)", epsilon, tiles[-1].duration)
    logger.debug("epsilon=%d: extracted %d snapshots", epsilon, len(snapshots))
    return DynamicNetwork(epsilon, span, tuple(snapshots))
