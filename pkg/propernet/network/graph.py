"""
Immutable snapshot and snapshot-sequence value types.

A Snapshot is the static graph of one sub-interval; a DynamicNetwork is the
chronologically ordered, contiguous sequence of snapshots over a span.
"""

import math
import sys
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NewType, Optional, Sequence, Tuple

from ..error_handling import InvalidEpsilon, NonContiguous

NodeId = NewType("NodeId", str)

_EMPTY: FrozenSet[NodeId] = frozenset()


def intern_node(name: str) -> NodeId:
    """Intern an actor string; identity is case-sensitive."""
    return NodeId(sys.intern(name))


@dataclass(frozen=True, order=True)
class Link:
    """Undirected link stored with endpoints in canonical order (a < b)."""
    a: NodeId
    b: NodeId

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"link endpoints must satisfy a < b, got ({self.a!r}, {self.b!r})")

    @classmethod
    def of(cls, u: str, v: str) -> "Link":
        """Canonical link between u and v; raises ValueError for a self-link."""
        if u == v:
            raise ValueError(f"self-link on {u!r}")
        return cls(u, v) if u < v else cls(v, u)

    def __iter__(self) -> Iterator[NodeId]:
        yield self.a
        yield self.b


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open time interval [start, end) in UTC epoch seconds."""
    start: int
    end: int

    def __post_init__(self):
        if not self.start < self.end:
            raise ValueError(f"interval start must precede end, got [{self.start}, {self.end})")

    @property
    def duration(self) -> int:
        return self.end - self.start

    def contains(self, t: int) -> bool:
        return self.start <= t < self.end


@dataclass(frozen=True)
class Snapshot:
    """Node set and undirected link set observed during one interval."""
    interval: Interval
    nodes: FrozenSet[NodeId]
    links: FrozenSet[Link]
    ragged: bool = False
    adjacency: Mapping[NodeId, FrozenSet[NodeId]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        neighbors: Dict[NodeId, set] = {}
        for link in self.links:
            if link.a not in self.nodes or link.b not in self.nodes:
                raise ValueError(f"link {link} has an endpoint outside the node set")
            neighbors.setdefault(link.a, set()).add(link.b)
            neighbors.setdefault(link.b, set()).add(link.a)
        frozen = {node: frozenset(adjacent) for node, adjacent in neighbors.items()}
        object.__setattr__(self, "adjacency", MappingProxyType(frozen))

    @classmethod
    def build(cls, interval: Interval, nodes: Iterable[str] = (), links: Iterable[Link] = (),
              ragged: bool = False) -> "Snapshot":
        """Build a snapshot, adding every link endpoint to the node set."""
        link_set = frozenset(links)
        node_set = set(nodes)
        for link in link_set:
            node_set.update(link)
        return cls(interval, frozenset(node_set), link_set, ragged)

    @classmethod
    def empty(cls, interval: Interval, ragged: bool = False) -> "Snapshot":
        return cls(interval, frozenset(), frozenset(), ragged)

    def neighbors(self, v: NodeId) -> FrozenSet[NodeId]:
        return neighbors(self, v)

    def __len__(self) -> int:
        return len(self.nodes)


def neighbors(s: Snapshot, v: NodeId) -> FrozenSet[NodeId]:
    """v's first order neighborhood in s; empty when v is absent or isolated."""
    return s.adjacency.get(v, _EMPTY)


def _check_contiguous(snapshots: Sequence[Snapshot]) -> None:
    for prev, nxt in zip(snapshots, snapshots[1:]):
        if prev.interval.end != nxt.interval.start:
            raise NonContiguous(
                f"snapshot intervals are not contiguous: [{prev.interval.start}, {prev.interval.end}) "
                f"then [{nxt.interval.start}, {nxt.interval.end})",
                context={"prev_end": prev.interval.end, "next_start": nxt.interval.start}
            )


def aggregate(snapshots: Sequence[Snapshot]) -> Snapshot:
    """Union of a contiguous, ordered run of snapshots over their joint interval."""
    if not snapshots:
        raise ValueError("aggregate needs at least one snapshot")
    if len(snapshots) == 1:
        return snapshots[0]
    _check_contiguous(snapshots)
    nodes = frozenset().union(*(s.nodes for s in snapshots))
    links = frozenset().union(*(s.links for s in snapshots))
    interval = Interval(snapshots[0].interval.start, snapshots[-1].interval.end)
    return Snapshot(interval, nodes, links, ragged=snapshots[-1].ragged)


def relabel(s: Snapshot, mapping: Mapping[str, str]) -> Snapshot:
    """Apply a node-id bijection to a snapshot."""
    nodes = frozenset(intern_node(mapping[v]) for v in s.nodes)
    links = frozenset(Link.of(mapping[link.a], mapping[link.b]) for link in s.links)
    return Snapshot(s.interval, nodes, links, s.ragged)


@dataclass(frozen=True)
class DynamicNetwork:
    """Chronologically ordered snapshots tiling a span.

    Snapshots produced by extraction all have length ``epsilon`` except a
    possibly shorter (ragged) last one; aggregated networks keep the base
    epsilon but carry variable-length snapshots.
    """
    epsilon: int
    span: Interval
    snapshots: Tuple[Snapshot, ...]

    def __post_init__(self):
        if self.epsilon <= 0:
            raise InvalidEpsilon(f"epsilon must be positive, got {self.epsilon}", context={"epsilon": self.epsilon})
        object.__setattr__(self, "snapshots", tuple(self.snapshots))
        if not self.snapshots:
            raise ValueError("a dynamic network needs at least one snapshot")
        _check_contiguous(self.snapshots)
        first, last = self.snapshots[0].interval, self.snapshots[-1].interval
        if first.start != self.span.start or last.end != self.span.end:
            raise NonContiguous(
                "snapshots do not tile the span",
                context={"span": (self.span.start, self.span.end), "covered": (first.start, last.end)}
            )

    @staticmethod
    def tile(span: Interval, epsilon: int) -> List[Interval]:
        """Consecutive epsilon-intervals covering span; the last may be shorter."""
        if epsilon <= 0:
            raise InvalidEpsilon(f"epsilon must be positive, got {epsilon}", context={"epsilon": epsilon})
        count = math.ceil(span.duration / epsilon)
        return [
            Interval(span.start + k * epsilon, min(span.start + (k + 1) * epsilon, span.end))
            for k in range(count)
        ]

    def pairs(self) -> Iterator[Tuple[Snapshot, Snapshot]]:
        """Consecutive (prev, next) snapshot pairs in order."""
        return zip(self.snapshots, self.snapshots[1:])

    @property
    def full_snapshots(self) -> Tuple[Snapshot, ...]:
        """Snapshots excluding a ragged tail."""
        if self.snapshots[-1].ragged:
            return self.snapshots[:-1]
        return self.snapshots

    @property
    def ragged_tail(self) -> Optional[Snapshot]:
        return self.snapshots[-1] if self.snapshots[-1].ragged else None

    def __len__(self) -> int:
        return len(self.snapshots)

    def __iter__(self) -> Iterator[Snapshot]:
        return iter(self.snapshots)

    def __getitem__(self, index: int) -> Snapshot:
        return self.snapshots[index]
